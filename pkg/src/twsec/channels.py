"""Channel models for the two-way wiretap setting.

A discrete memoryless two-way wiretap channel is a transition tensor
``p(y1, y2, z | x1, x2)``: two senders, each also receiving, plus an
eavesdropper output z.  The Gaussian model carries powers and noise
variances instead of a tensor.  Channels are immutable after construction
and all operations here are pure.
"""

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from .exceptions import ChannelSpecError, ValidationError
from .infocalc import NORM_TOL, ConditionalKernel

LIBRARY_KINDS = ("bmc", "xor", "adder", "mod2")

# Default feasibility tolerance for the degradedness check.
DEGRADED_TOL = 1e-7


class DiscreteTWC:
    """Discrete memoryless two-way wiretap channel.

    Parameters
    ----------
    transition : array-like
        Tensor of shape ``(|X1|, |X2|, |Y1|, |Y2|, |Z|)`` holding
        ``p(y1, y2, z | x1, x2)``.  The constructor only checks the shape;
        use :func:`validate_channel` for stochasticity diagnostics.
    name : str, optional
        Label used in reports and file summaries.
    """

    __slots__ = ("transition", "name")

    def __init__(self, transition, name=""):
        arr = np.array(transition, dtype=float)
        if arr.ndim != 5:
            raise ValidationError(
                f"transition tensor needs 5 axes (x1, x2, y1, y2, z), got {arr.ndim}"
            )
        if any(s < 1 for s in arr.shape):
            raise ValidationError(f"every alphabet needs size >= 1, got {arr.shape}")
        arr.setflags(write=False)
        self.transition = arr
        self.name = name

    @property
    def size_x1(self):
        return self.transition.shape[0]

    @property
    def size_x2(self):
        return self.transition.shape[1]

    @property
    def size_y1(self):
        return self.transition.shape[2]

    @property
    def size_y2(self):
        return self.transition.shape[3]

    @property
    def size_z(self):
        return self.transition.shape[4]

    def output_marginal(self, output):
        """p(w | x1, x2) for one output w in {"y1", "y2", "z"}."""
        axis = {"y1": (3, 4), "y2": (2, 4), "z": (2, 3)}
        if output not in axis:
            raise ValueError(f'output must be "y1", "y2" or "z", got {output!r}')
        return self.transition.sum(axis=axis[output])

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"DiscreteTWC{label}(shape={self.transition.shape})"


@dataclass(frozen=True)
class GaussianTWC:
    """Gaussian two-way wiretap channel: powers P1, P2 and noise variances
    N1, N2, Ne.  All five must be positive; the capacity formulas in
    :mod:`twsec.regions` additionally require Ne > N1 and Ne > N2."""

    p1: float
    p2: float
    n1: float
    n2: float
    ne: float

    def __post_init__(self):
        for field in ("p1", "p2", "n1", "n2", "ne"):
            v = getattr(self, field)
            if not (np.isfinite(v) and v > 0):
                raise ValidationError(f"GaussianTWC.{field} must be positive, got {v!r}")

    @property
    def is_degraded(self):
        """True when the eavesdropper is noisier than both users."""
        return self.ne > self.n1 and self.ne > self.n2


@dataclass(frozen=True)
class Mod2Params:
    """Crossover probabilities of the three additive binary noises in the
    modulo-2 channel: user 1, user 2 and the eavesdropper."""

    eps1: float
    eps2: float
    epsz: float

    def __post_init__(self):
        for field in ("eps1", "eps2", "epsz"):
            v = getattr(self, field)
            if not 0.0 <= v <= 1.0:
                raise ValidationError(f"Mod2Params.{field} must be in [0,1], got {v!r}")


@dataclass(frozen=True)
class DegradednessVerdict:
    """Outcome of the stochastic-degradedness feasibility check.

    ``residual`` is the max absolute mismatch between the eavesdropper
    marginal and the best reconstruction through the chosen user output;
    ``witness`` is the reconstructing kernel when one exists within
    tolerance.
    """

    feasible: bool
    witness: Optional[ConditionalKernel]
    residual: float


def validate_channel(ch):
    """Diagnose a channel tensor; returns a list of violation strings.

    An empty list means every (x1, x2) row is a valid pmf within
    ``NORM_TOL``.  This never raises: it is the diagnostic half of the
    loader's validation.
    """
    violations = []
    t = ch.transition
    for x1 in range(ch.size_x1):
        for x2 in range(ch.size_x2):
            row = t[x1, x2]
            if np.any(row < 0):
                violations.append(
                    f"negative probability in row (x1={x1}, x2={x2}): min {row.min():g}"
                )
            s = float(row.sum())
            if abs(s - 1.0) > NORM_TOL:
                violations.append(f"row (x1={x1}, x2={x2}) sums to {s!r}, not 1")
    return violations


def _deterministic_same_output(fn, n_out):
    """Tensor with y1 = y2 = z = fn(x1, x2) for binary inputs."""
    t = np.zeros((2, 2, n_out, n_out, n_out))
    for x1 in range(2):
        for x2 in range(2):
            v = fn(x1, x2)
            t[x1, x2, v, v, v] = 1.0
    return t


def _mod2_tensor(params):
    flips = []
    for eps in (params.eps1, params.eps2, params.epsz):
        flips.append(np.array([1.0 - eps, eps]))
    t = np.zeros((2, 2, 2, 2, 2))
    for x1 in range(2):
        for x2 in range(2):
            base = x1 ^ x2
            for y1 in range(2):
                for y2 in range(2):
                    for z in range(2):
                        t[x1, x2, y1, y2, z] = (
                            flips[0][y1 ^ base] * flips[1][y2 ^ base] * flips[2][z ^ base]
                        )
    return t


def build_library_channel(kind, params=None):
    """Construct one of the built-in binary-input channels.

    Kinds: ``bmc`` (y = x1*x2), ``xor`` (y = x1 XOR x2), ``adder``
    (y = x1 + x2 over {0,1,2}) -- all with identical outputs at both users
    and the eavesdropper -- and ``mod2``, whose three outputs are
    x1 XOR x2 corrupted by independent flips given by ``params``.
    """
    kind = kind.lower()
    if kind == "bmc":
        return DiscreteTWC(_deterministic_same_output(lambda a, b: a * b, 2), name="bmc")
    if kind == "xor":
        return DiscreteTWC(_deterministic_same_output(lambda a, b: a ^ b, 2), name="xor")
    if kind == "adder":
        return DiscreteTWC(_deterministic_same_output(lambda a, b: a + b, 3), name="adder")
    if kind == "mod2":
        if params is None:
            raise ValueError("mod2 requires Mod2Params (eps1, eps2, epsz)")
        return DiscreteTWC(_mod2_tensor(params), name="mod2")
    raise ValueError(f"unknown library channel {kind!r}; choose from {LIBRARY_KINDS}")


def is_same_output(ch, tol=1e-12):
    """True when all three outputs are literally the same symbol.

    Checks equal output alphabet sizes and that all transition mass sits on
    the diagonal y1 = y2 = z.  This is the class assumption of the
    output-symmetric converse bound, which conditions on the shared output
    sequence itself.
    """
    if not (ch.size_y1 == ch.size_y2 == ch.size_z):
        return False
    t = ch.transition
    diag = 0.0
    for y in range(ch.size_y1):
        diag += t[:, :, y, y, y].sum()
    total = t.sum()
    return abs(total - diag) <= tol * max(1.0, total)


def output_marginals_equal(ch, tol=1e-12):
    """True when the three per-output conditional marginals coincide.

    Weaker than :func:`is_same_output`: independent identically distributed
    output noises pass here.  Sufficient for the achievability formulas,
    which see each output only through its own marginal.
    """
    if not (ch.size_y1 == ch.size_y2 == ch.size_z):
        return False
    m1 = ch.output_marginal("y1")
    m2 = ch.output_marginal("y2")
    mz = ch.output_marginal("z")
    return bool(np.abs(m1 - m2).max() <= tol and np.abs(m1 - mz).max() <= tol)


def check_stochastic_degradedness(ch, strong_output="y1", tol=DEGRADED_TOL):
    """Test whether z is a stochastically degraded version of a user output.

    Solves, as a small linear program, for a row-stochastic kernel
    ``k(z | y)`` with ``p(z | x1, x2) = sum_y p(y | x1, x2) k(z | y)`` for
    every input pair, where y is the chosen ``strong_output``.  The LP
    minimizes the max absolute mismatch, so infeasibility comes with a
    quantitative residual and feasibility with an explicit witness kernel.
    """
    violations = validate_channel(ch)
    if violations:
        raise ValidationError("invalid channel: " + "; ".join(violations))
    if strong_output not in ("y1", "y2"):
        raise ValueError(f'strong_output must be "y1" or "y2", got {strong_output!r}')

    p_strong = ch.output_marginal(strong_output)   # (x1, x2, y)
    p_z = ch.output_marginal("z")                  # (x1, x2, z)
    n_in = ch.size_x1 * ch.size_x2
    n_y = p_strong.shape[2]
    n_z = ch.size_z

    # Variables: kernel entries k[y, z] flattened, then the slack t.
    n_k = n_y * n_z
    a = p_strong.reshape(n_in, n_y)
    b = p_z.reshape(n_in, n_z)

    # sum_y a[i, y] k[y, z] - b[i, z] <= t  and  >= -t
    rows = []
    rhs = []
    for i in range(n_in):
        for z in range(n_z):
            coef = np.zeros(n_k + 1)
            coef[z::n_z][:n_y] = a[i]
            coef[-1] = -1.0
            rows.append(coef)
            rhs.append(b[i, z])
            rows.append(-coef.copy())
            rows[-1][-1] = -1.0
            rhs.append(-b[i, z])
    a_ub = np.array(rows)
    b_ub = np.array(rhs)

    # Row-stochasticity: sum_z k[y, z] = 1 for every y.
    a_eq = np.zeros((n_y, n_k + 1))
    for y in range(n_y):
        a_eq[y, y * n_z:(y + 1) * n_z] = 1.0
    b_eq = np.ones(n_y)

    cost = np.zeros(n_k + 1)
    cost[-1] = 1.0
    bounds = [(0.0, 1.0)] * n_k + [(0.0, None)]
    res = linprog(cost, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq,
                  bounds=bounds, method="highs")
    if not res.success:
        raise RuntimeError(f"degradedness LP failed: {res.message}")

    residual = float(res.x[-1])
    kernel = res.x[:-1].reshape(n_y, n_z)
    feasible = residual <= tol
    witness = None
    if feasible:
        kernel = np.clip(kernel, 0.0, None)
        kernel /= kernel.sum(axis=1, keepdims=True)
        witness = ConditionalKernel(kernel, from_ndim=1)
    return DegradednessVerdict(feasible=feasible, witness=witness, residual=residual)


# --------------------------------------------------------------------------
# Channel spec files: one JSON document, either a discrete tensor or the
# Gaussian parameter set, never both.
# --------------------------------------------------------------------------

_ALPHABET_KEYS = ("x1", "x2", "y1", "y2", "z")
_GAUSSIAN_KEYS = ("P1", "P2", "N1", "N2", "Ne")


def save_channel(ch, path):
    """Write a channel spec file; round-trips bit-exactly through repr floats."""
    if isinstance(ch, DiscreteTWC):
        doc = {
            "type": "discrete",
            "alphabets": {
                "x1": ch.size_x1, "x2": ch.size_x2,
                "y1": ch.size_y1, "y2": ch.size_y2, "z": ch.size_z,
            },
            "transition": ch.transition.tolist(),
        }
    elif isinstance(ch, GaussianTWC):
        doc = {"type": "gaussian", "P1": ch.p1, "P2": ch.p2,
               "N1": ch.n1, "N2": ch.n2, "Ne": ch.ne}
    else:
        raise TypeError(f"cannot save channel of type {type(ch).__name__}")
    with open(path, "w") as f:
        json.dump(doc, f, indent=1, sort_keys=True)
        f.write("\n")


def load_channel(path):
    """Read a channel spec file into a DiscreteTWC or GaussianTWC.

    Malformed documents raise :class:`ChannelSpecError` naming the missing
    or bad field; a syntactically fine but non-stochastic discrete tensor
    raises :class:`ValidationError`.
    """
    with open(path) as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise ChannelSpecError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ChannelSpecError("top-level value must be an object")
    kind = doc.get("type")
    if kind == "discrete":
        return _load_discrete(doc)
    if kind == "gaussian":
        return _load_gaussian(doc)
    raise ChannelSpecError(f'field "type" must be "discrete" or "gaussian", got {kind!r}')


def _load_discrete(doc):
    if "transition" not in doc:
        raise ChannelSpecError('missing field "transition"')
    if "alphabets" not in doc:
        raise ChannelSpecError('missing field "alphabets"')
    alphabets = doc["alphabets"]
    if not isinstance(alphabets, dict):
        raise ChannelSpecError('field "alphabets" must be an object')
    sizes = []
    for key in _ALPHABET_KEYS:
        if key not in alphabets:
            raise ChannelSpecError(f'missing field "alphabets.{key}"')
        size = alphabets[key]
        if isinstance(size, bool) or not isinstance(size, int) or size < 1:
            raise ChannelSpecError(f'field "alphabets.{key}" must be a positive integer')
        sizes.append(size)
    try:
        tensor = np.array(doc["transition"], dtype=float)
    except (TypeError, ValueError) as e:
        raise ChannelSpecError(f'field "transition" is not a numeric tensor: {e}') from e
    if tensor.shape != tuple(sizes):
        raise ChannelSpecError(
            f'field "transition" has shape {tensor.shape}, '
            f"alphabets declare {tuple(sizes)}"
        )
    ch = DiscreteTWC(tensor)
    violations = validate_channel(ch)
    if violations:
        raise ValidationError("non-stochastic transition: " + "; ".join(violations))
    return ch


def _load_gaussian(doc):
    values = []
    for key in _GAUSSIAN_KEYS:
        if key not in doc:
            raise ChannelSpecError(f'missing field "{key}"')
        v = doc[key]
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise ChannelSpecError(f'field "{key}" must be a number')
        values.append(float(v))
    return GaussianTWC(*values)
