"""Exact probability and information measures on finite alphabets.

All logarithms are base 2, so every returned quantity is in bits.  The
convention 0*log(0) = 0 applies throughout.  Distributions are stored as
dense numpy arrays; the alphabets in this problem domain are tiny, so
sparsity is never worth it.

Everything here is immutable after construction and all operations are
pure functions, so values can be shared freely across threads.
"""

import numpy as np

from .exceptions import ValidationError

# A pmf must sum to one within this tolerance.
NORM_TOL = 1e-9

# Mutual informations in [-MI_CLAMP_TOL, 0) are clamped to 0; anything more
# negative indicates a real bug in the caller and raises.
MI_CLAMP_TOL = 1e-9


class Pmf:
    """Dense probability mass function over one or more finite axes.

    Parameters
    ----------
    mass : array-like
        Non-negative array whose entries sum to 1 within ``NORM_TOL``.
        The shape gives the alphabet size of each axis.
    """

    __slots__ = ("mass",)

    def __init__(self, mass):
        arr = np.array(mass, dtype=float)
        if arr.ndim == 0:
            raise ValidationError("a pmf needs at least one axis")
        if any(s < 1 for s in arr.shape):
            raise ValidationError(f"every axis needs size >= 1, got shape {arr.shape}")
        if np.any(arr < 0):
            worst = float(arr.min())
            raise ValidationError(f"pmf has negative mass (min entry {worst:g})")
        total = float(arr.sum())
        if abs(total - 1.0) > NORM_TOL:
            raise ValidationError(f"pmf mass sums to {total!r}, not 1 within {NORM_TOL:g}")
        arr.setflags(write=False)
        self.mass = arr

    @property
    def dims(self):
        """Alphabet sizes, one per axis."""
        return self.mass.shape

    @property
    def ndim(self):
        return self.mass.ndim

    def marginal(self, axes):
        """Marginal pmf over ``axes`` (kept in increasing axis order)."""
        axes = _check_axes(self, axes, "axes")
        drop = tuple(a for a in range(self.ndim) if a not in axes)
        return Pmf(self.mass.sum(axis=drop)) if drop else Pmf(self.mass)

    @classmethod
    def uniform(cls, *dims):
        n = int(np.prod(dims))
        return cls(np.full(dims, 1.0 / n))

    @classmethod
    def point_mass(cls, index, *dims):
        arr = np.zeros(dims)
        arr[index] = 1.0
        return cls(arr)

    def __repr__(self):
        return f"Pmf(dims={self.dims})"


class ConditionalKernel:
    """Row-stochastic kernel mapping a conditioning alphabet to an output one.

    Parameters
    ----------
    table : array-like
        Array of shape ``from_dims + to_dims``; for every conditioning
        multi-index the slice over the output axes is a valid pmf.
    from_ndim : int
        How many leading axes of ``table`` are conditioning axes.
    """

    __slots__ = ("table", "from_ndim")

    def __init__(self, table, from_ndim=1):
        arr = np.array(table, dtype=float)
        if not 1 <= from_ndim < arr.ndim:
            raise ValidationError(
                f"from_ndim={from_ndim} must leave at least one output axis "
                f"of a {arr.ndim}-axis table"
            )
        if np.any(arr < 0):
            raise ValidationError("kernel has negative entries")
        out_axes = tuple(range(from_ndim, arr.ndim))
        row_sums = arr.sum(axis=out_axes)
        if np.any(np.abs(row_sums - 1.0) > NORM_TOL):
            bad = np.unravel_index(int(np.argmax(np.abs(row_sums - 1.0))), row_sums.shape)
            raise ValidationError(
                f"kernel row {bad} sums to {float(row_sums[bad])!r}, not 1"
            )
        arr.setflags(write=False)
        self.table = arr
        self.from_ndim = from_ndim

    @property
    def from_dims(self):
        return self.table.shape[: self.from_ndim]

    @property
    def to_dims(self):
        return self.table.shape[self.from_ndim:]

    def row(self, index):
        """The output pmf for one conditioning multi-index."""
        return Pmf(self.table[index])

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n), from_ndim=1)

    def __repr__(self):
        return f"ConditionalKernel({self.from_dims} -> {self.to_dims})"


def _check_axes(p, axes, name):
    axes = tuple(sorted(int(a) for a in axes))
    if len(set(axes)) != len(axes):
        raise ValueError(f"{name} contains duplicates: {axes}")
    for a in axes:
        if not 0 <= a < p.ndim:
            raise ValueError(f"{name} axis {a} out of range for {p.ndim} axes")
    return axes


def _entropy_raw(mass):
    """-sum p*log2(p) with 0*log(0)=0, on a raw non-negative array."""
    flat = np.asarray(mass, dtype=float).ravel()
    nz = flat[flat > 0]
    return float(-(nz * np.log2(nz)).sum())


def entropy(p):
    """Shannon entropy of a pmf in bits.

    Accepts a :class:`Pmf` or anything its constructor accepts, so raw
    arrays are validated on the way in.
    """
    if not isinstance(p, Pmf):
        p = Pmf(p)
    return _entropy_raw(p.mass)


def _subset_entropy(joint, axes):
    if axes:
        keep = tuple(sorted(axes))
        drop = tuple(a for a in range(joint.ndim) if a not in keep)
        return _entropy_raw(joint.mass.sum(axis=drop) if drop else joint.mass)
    return 0.0


def _clamp_mi(value, what):
    if value < -MI_CLAMP_TOL:
        raise RuntimeError(
            f"{what} evaluated to {value!r}, below -{MI_CLAMP_TOL:g}; "
            "this indicates an inconsistent joint distribution"
        )
    return max(0.0, value)


def mutual_information(joint, axes_a, axes_b):
    """I(A;B) in bits between two disjoint axis sets of a joint pmf.

    Computed as H(A) + H(B) - H(A,B).  Values within ``MI_CLAMP_TOL`` below
    zero are clamped to 0; anything lower raises.
    """
    if not isinstance(joint, Pmf):
        joint = Pmf(joint)
    a = _check_axes(joint, axes_a, "axes_a")
    b = _check_axes(joint, axes_b, "axes_b")
    if set(a) & set(b):
        raise ValueError(f"axis sets overlap: {a} and {b}")
    value = (
        _subset_entropy(joint, a)
        + _subset_entropy(joint, b)
        - _subset_entropy(joint, a + b)
    )
    return _clamp_mi(value, f"I({a};{b})")


def conditional_mutual_information(joint, axes_a, axes_b, axes_c):
    """I(A;B|C) in bits for three pairwise-disjoint axis sets.

    Computed as H(A,C) + H(B,C) - H(A,B,C) - H(C), clamped at 0 the same
    way as :func:`mutual_information`.  An empty ``axes_c`` reduces to the
    unconditional mutual information.
    """
    if not isinstance(joint, Pmf):
        joint = Pmf(joint)
    a = _check_axes(joint, axes_a, "axes_a")
    b = _check_axes(joint, axes_b, "axes_b")
    c = _check_axes(joint, axes_c, "axes_c")
    if set(a) & set(b) or set(a) & set(c) or set(b) & set(c):
        raise ValueError(f"axis sets must be pairwise disjoint: {a}, {b}, {c}")
    value = (
        _subset_entropy(joint, a + c)
        + _subset_entropy(joint, b + c)
        - _subset_entropy(joint, a + b + c)
        - _subset_entropy(joint, c)
    )
    return _clamp_mi(value, f"I({a};{b}|{c})")


def binary_entropy(a):
    """h(a) = -a*log2(a) - (1-a)*log2(1-a), with h(0) = h(1) = 0."""
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"binary_entropy needs a probability in [0,1], got {a!r}")
    if a == 0.0 or a == 1.0:
        return 0.0
    return float(-a * np.log2(a) - (1.0 - a) * np.log2(1.0 - a))


def binary_convolve(a, b):
    """a*b := a(1-b) + (1-a)b, the crossover of two cascaded binary flips."""
    a = float(a)
    b = float(b)
    if not 0.0 <= a <= 1.0 or not 0.0 <= b <= 1.0:
        raise ValueError(f"binary_convolve needs probabilities in [0,1], got {a!r}, {b!r}")
    return a * (1.0 - b) + (1.0 - a) * b


def joint_from_components(p_u1, p_u2, k_x1, k_x2, channel):
    """Full joint over (U1, U2, X1, X2, Y1, Y2, Z) from product components.

    The joint factorizes as
    ``p(u1) p(u2) p(x1|u1) p(x2|u2) p(y1,y2,z|x1,x2)``, i.e. two independent
    codeword variables each pushed through its own prefix kernel and then
    through the two-way channel.

    Parameters
    ----------
    p_u1, p_u2 : Pmf
        Single-axis codeword distributions.
    k_x1, k_x2 : ConditionalKernel
        Prefix kernels U1 -> X1 and U2 -> X2.
    channel : object
        Anything exposing a ``transition`` array of shape
        ``(|X1|, |X2|, |Y1|, |Y2|, |Z|)``.

    Returns
    -------
    Pmf
        Seven-axis joint with axes ordered (U1, U2, X1, X2, Y1, Y2, Z).
    """
    for name, p in (("p_u1", p_u1), ("p_u2", p_u2)):
        if p.ndim != 1:
            raise ValueError(f"{name} must be a single-axis pmf, got {p.dims}")
    t = np.asarray(channel.transition, dtype=float)
    if t.ndim != 5:
        raise ValueError(f"channel transition must have 5 axes, got {t.ndim}")
    if k_x1.from_dims != p_u1.dims or k_x1.to_dims != (t.shape[0],):
        raise ValueError(
            f"k_x1 maps {k_x1.from_dims}->{k_x1.to_dims}; expected "
            f"{p_u1.dims}->({t.shape[0]},)"
        )
    if k_x2.from_dims != p_u2.dims or k_x2.to_dims != (t.shape[1],):
        raise ValueError(
            f"k_x2 maps {k_x2.from_dims}->{k_x2.to_dims}; expected "
            f"{p_u2.dims}->({t.shape[1]},)"
        )
    joint = np.einsum(
        "a,b,ac,bd,cdefg->abcdefg",
        p_u1.mass, p_u2.mass, k_x1.table, k_x2.table, t,
    )
    return Pmf(joint)
