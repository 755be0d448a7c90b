"""Exact small-blocklength evaluation of random-binning wiretap codes.

Each user owns a codebook of i.i.d. codeword sequences indexed by a secret
index and a randomization index; encoders push the selected codeword
through the user's prefix kernel, the memoryless channel acts letter by
letter, and each decoder sees its own transmitted sequence as side
information.  At desk-scale blocklengths everything is small enough to
enumerate, so error probabilities and per-message leakage rates come out
exact rather than estimated; a seeded Monte-Carlo path covers systems
beyond the enumeration budget.
"""

import json
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .config import DEFAULT_ENUM_BUDGET, resolve_budget
from .exceptions import BudgetExceededError, ValidationError
from .infocalc import conditional_mutual_information, mutual_information

_RATE_TOL = 1e-9

# Empirical leakage needs a (secret, z-sequence) histogram; above this many
# z sequences the plug-in estimate is not attempted.
_MAX_EMPIRICAL_Z = 1 << 20


def _count_from_rate(rate, n, name):
    if rate < 0:
        raise ValidationError(f"{name} must be non-negative, got {rate!r}")
    k = rate * n
    if abs(k - round(k)) > _RATE_TOL * max(1.0, n):
        raise ValidationError(
            f"{name} = {rate!r} is not a multiple of 1/{n}; quantize rates first"
        )
    return 1 << int(round(k))


def quantize_rate(rate, n):
    """Largest multiple of 1/n not exceeding ``rate`` (down to 0)."""
    if rate < 0:
        raise ValidationError(f"rates must be non-negative, got {rate!r}")
    return math.floor(rate * n + _RATE_TOL) / n


@dataclass(frozen=True)
class CodeRates:
    """Blocklength and the secret/randomization rate split of both users.

    Every rate must be a multiple of 1/n so that the message counts
    2^(n*rate) are integers.  The optional fields record how each user's
    codebook is partitioned into sub-codebooks for the secrecy argument of
    the opposite message.
    """

    n: int
    r1s: float
    r1r: float
    r2s: float
    r2r: float
    r11: Optional[float] = None
    r12: Optional[float] = None
    r21: Optional[float] = None
    r22: Optional[float] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"blocklength must be >= 1, got {self.n}")
        for name in ("r1s", "r1r", "r2s", "r2r"):
            _count_from_rate(getattr(self, name), self.n, name)
        for split, total in ((("r11", "r12"), self.r1), (("r21", "r22"), self.r2)):
            a = getattr(self, split[0])
            b = getattr(self, split[1])
            if (a is None) != (b is None):
                raise ValidationError(f"{split[0]} and {split[1]} must come together")
            if a is not None and abs(a + b - total) > _RATE_TOL:
                raise ValidationError(
                    f"{split[0]} + {split[1]} = {a + b!r} must equal {total!r}"
                )

    @property
    def r1(self):
        return self.r1s + self.r1r

    @property
    def r2(self):
        return self.r2s + self.r2r

    @property
    def m1s(self):
        return _count_from_rate(self.r1s, self.n, "r1s")

    @property
    def m1r(self):
        return _count_from_rate(self.r1r, self.n, "r1r")

    @property
    def m2s(self):
        return _count_from_rate(self.r2s, self.n, "r2s")

    @property
    def m2r(self):
        return _count_from_rate(self.r2r, self.n, "r2r")

    @classmethod
    def quantized(cls, n, r1s, r1r, r2s, r2r):
        """Quantize each requested rate down to a multiple of 1/n."""
        return cls(n, quantize_rate(r1s, n), quantize_rate(r1r, n),
                   quantize_rate(r2s, n), quantize_rate(r2r, n))

    def as_dict(self):
        d = {"r1s": self.r1s, "r1r": self.r1r, "r2s": self.r2s, "r2r": self.r2r}
        for name in ("r11", "r12", "r21", "r22"):
            v = getattr(self, name)
            if v is not None:
                d[name] = v
        return d


@dataclass(frozen=True, eq=False)
class Codebook:
    """Codeword table of one user: shape (secret count, rand count, n)."""

    table: np.ndarray
    seed: Optional[int] = None

    def __post_init__(self):
        arr = np.asarray(self.table, dtype=np.int64)
        if arr.ndim != 3:
            raise ValidationError("codebook table needs shape (m_s, m_r, n)")
        arr.setflags(write=False)
        object.__setattr__(self, "table", arr)

    @property
    def flat(self):
        """Codewords in (secret, rand) lexicographic order."""
        ms, mr, n = self.table.shape
        return self.table.reshape(ms * mr, n)


def full_space_codebook(n, alphabet_size):
    """The codebook holding every length-n sequence once (rand index 1)."""
    return Codebook(_grid_sequences(alphabet_size, n).reshape(-1, 1, n))


def _grid_sequences(base, n):
    """All length-n sequences over {0..base-1}, most-significant digit first."""
    count = base ** n
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, n), dtype=np.int64)
    for t in range(n - 1, -1, -1):
        out[:, t] = idx % base
        idx //= base
    return out


@dataclass(frozen=True)
class LeakageReport:
    """Exact or empirical secrecy and reliability figures of one system.

    ``leak1``/``leak2`` are I(secret_i ; Z^n)/n in bits per use; ``pe1`` is
    the probability that user 1 misdecodes user 2's secret (and vice
    versa), averaged over messages, randomization, codeword noise and the
    channel.
    """

    n: int
    rates: dict
    quantized_rates: dict
    decoder: str
    seed: Optional[int]
    leak1: float
    leak2: float
    pe1: float
    pe2: float
    method: str
    trials: Optional[int] = None

    def to_json(self, path=None):
        doc = {
            "n": self.n,
            "rates": self.rates,
            "quantized_rates": self.quantized_rates,
            "decoder": self.decoder,
            "seed": self.seed,
            "leak1": self.leak1,
            "leak2": self.leak2,
            "pe1": self.pe1,
            "pe2": self.pe2,
            "method": self.method,
        }
        if self.trials is not None:
            doc["trials"] = self.trials
        text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
        if path is not None:
            with open(path, "w") as f:
                f.write(text)
        return text


class WiretapCodeSystem:
    """A channel, prefix kernels, rates and realized codebooks, ready to run.

    Build through :func:`build_system`; the constructor only wires parts
    together and checks alphabet consistency.
    """

    def __init__(self, channel, prefixes, rates, codebooks, decoder="ml",
                 typ_eps=0.1, seed=None):
        if prefixes.k_x1.to_dims != (channel.size_x1,):
            raise ValidationError(
                f"prefix 1 outputs {prefixes.k_x1.to_dims}, channel expects "
                f"({channel.size_x1},)"
            )
        if prefixes.k_x2.to_dims != (channel.size_x2,):
            raise ValidationError(
                f"prefix 2 outputs {prefixes.k_x2.to_dims}, channel expects "
                f"({channel.size_x2},)"
            )
        cb1, cb2 = codebooks
        for cb, pu, tag in ((cb1, prefixes.p_u1, "1"), (cb2, prefixes.p_u2, "2")):
            if cb.table.shape[2] != rates.n:
                raise ValidationError(f"codebook {tag} blocklength mismatch")
            if cb.table.size and (cb.table.min() < 0 or cb.table.max() >= pu.dims[0]):
                raise ValidationError(f"codebook {tag} uses symbols outside U{tag}")
        if (cb1.table.shape[0], cb1.table.shape[1]) != (rates.m1s, rates.m1r):
            raise ValidationError("codebook 1 shape disagrees with rates")
        if (cb2.table.shape[0], cb2.table.shape[1]) != (rates.m2s, rates.m2r):
            raise ValidationError("codebook 2 shape disagrees with rates")
        if decoder not in ("ml", "typicality"):
            raise ValueError(f'decoder must be "ml" or "typicality", got {decoder!r}')
        self.channel = channel
        self.prefixes = prefixes
        self.rates = rates
        self.codebooks = (cb1, cb2)
        self.decoder = decoder
        self.typ_eps = float(typ_eps)
        self.seed = seed
        self._cache = None

    # Per-letter kernels shared by the exact and Monte-Carlo paths.
    def _tables(self):
        if self._cache is None:
            t = self.channel.transition
            kx1 = self.prefixes.k_x1.table
            kx2 = self.prefixes.k_x2.table
            ty1 = t.sum(axis=(3, 4))
            ty2 = t.sum(axis=(2, 4))
            tz = t.sum(axis=(2, 3))
            self._cache = {
                # own-input sampling kernels
                "a1": kx1,
                "a2": kx2,
                # v1[x1, u2, y1]: law of user 1's output given own input and
                # the other codeword letter
                "v1": np.einsum("bd,cdy->cby", kx2, ty1),
                "v2": np.einsum("ac,cdy->day", kx1, ty2),
                # wz[u1, u2, z]: eavesdropper letter law given both codewords
                "wz": np.einsum("ac,bd,cdz->abz", kx1, kx2, tz),
                "p_x1": self.prefixes.p_u1.mass @ kx1,
                "p_x2": self.prefixes.p_u2.mass @ kx2,
                "ident1": bool(np.array_equal(kx1, np.eye(kx1.shape[0]))),
                "ident2": bool(np.array_equal(kx2, np.eye(kx2.shape[0]))),
            }
        return self._cache

    def storage_cost(self):
        r = self.rates
        return (r.m1s * r.m1r + r.m2s * r.m2r) * r.n

    def enumeration_cost(self):
        """Joint terms the exact evaluation touches (budget metric)."""
        ch, r = self.channel, self.rates
        m1 = r.m1s * r.m1r
        m2 = r.m2s * r.m2r
        s1 = (ch.size_x1 * ch.size_y1) ** r.n
        s2 = (ch.size_x2 * ch.size_y2) ** r.n
        zn = ch.size_z ** r.n
        return m1 * m2 * zn + m2 * s1 + m1 * s2


def derive_randomization_rates(ch, prefixes, r1, r2):
    """Randomization rates that saturate the eavesdropper, unquantized.

    Each user spends I(U_i; Z) on direct confusion plus whatever part of
    the other user's codebook information at the eavesdropper the other
    user's own rate does not already cover.
    """
    j = prefixes.joint(ch)
    i_u1_z = mutual_information(j, [0], [6])
    i_u2_z = mutual_information(j, [1], [6])
    i_u2_z_g_u1 = conditional_mutual_information(j, [1], [6], [0])
    i_u1_z_g_u2 = conditional_mutual_information(j, [0], [6], [1])
    r1r = i_u1_z + max(0.0, i_u2_z_g_u1 - r2)
    r2r = i_u2_z + max(0.0, i_u1_z_g_u2 - r1)
    return r1r, r2r


def build_system(ch, prefixes, rates, seed=0, decoder="ml", typ_eps=0.1,
                 codebooks=None, budget=None):
    """Draw codebooks and assemble a runnable system, deterministic in seed.

    Codewords are i.i.d. from each user's codeword distribution (user 1
    drawn first).  When a user's total rate reaches the eavesdropper's
    conditional take of that user's codeword, the sub-codebook split of
    that codebook is recorded on the rates (floor-quantized).  Explicit
    ``codebooks`` bypass the random draw.
    """
    if not isinstance(rates, CodeRates):
        raise TypeError("rates must be a CodeRates")
    n = rates.n

    j = prefixes.joint(ch)
    i_u2_z_g_u1 = conditional_mutual_information(j, [1], [6], [0])
    i_u1_z_g_u2 = conditional_mutual_information(j, [0], [6], [1])
    enriched = rates
    if rates.r2 >= i_u2_z_g_u1 - _RATE_TOL:
        r22 = min(quantize_rate(i_u2_z_g_u1, n), rates.r2)
        enriched = replace(enriched, r21=enriched.r2 - r22, r22=r22)
    if rates.r1 >= i_u1_z_g_u2 - _RATE_TOL:
        r12 = min(quantize_rate(i_u1_z_g_u2, n), rates.r1)
        enriched = replace(enriched, r11=enriched.r1 - r12, r12=r12)

    if codebooks is None:
        limit = resolve_budget(budget, DEFAULT_ENUM_BUDGET)
        storage = (rates.m1s * rates.m1r + rates.m2s * rates.m2r) * n
        if storage > limit:
            raise BudgetExceededError(
                f"codebooks would hold {storage} symbols, budget is {limit}",
                required=storage,
            )
        rng = np.random.default_rng(seed)
        cb1 = Codebook(
            rng.choice(prefixes.p_u1.dims[0], size=(rates.m1s, rates.m1r, n),
                       p=prefixes.p_u1.mass),
            seed=seed,
        )
        cb2 = Codebook(
            rng.choice(prefixes.p_u2.dims[0], size=(rates.m2s, rates.m2r, n),
                       p=prefixes.p_u2.mass),
            seed=seed,
        )
        codebooks = (cb1, cb2)

    return WiretapCodeSystem(ch, prefixes, enriched, codebooks,
                             decoder=decoder, typ_eps=typ_eps, seed=seed)


def _sample_rows(kernel_rows, rng):
    """Categorical draw per entry: kernel_rows has shape (..., k)."""
    c = np.cumsum(kernel_rows, axis=-1)
    c[..., -1] = 1.0  # guard against rounding in the final cumsum
    r = rng.random(kernel_rows.shape[:-1])
    return np.argmax(r[..., None] < c, axis=-1)


def encode(system, user, w_s, randomness=None):
    """Encode one secret index into a channel input sequence.

    Picks the randomization index uniformly (forced when its count is 1),
    then pushes the codeword through the prefix kernel letter by letter;
    identity prefixes copy the codeword verbatim.  ``randomness`` is a seed
    or numpy Generator.
    """
    if user not in (1, 2):
        raise ValueError(f"user must be 1 or 2, got {user!r}")
    cb = system.codebooks[user - 1]
    ms, mr, n = cb.table.shape
    if not 0 <= w_s < ms:
        raise ValueError(f"secret index {w_s} out of range [0, {ms})")
    rng = randomness if isinstance(randomness, np.random.Generator) \
        else np.random.default_rng(randomness)
    w_r = int(rng.integers(mr)) if mr > 1 else 0
    u = cb.table[w_s, w_r]
    tables = system._tables()
    if tables["ident1" if user == 1 else "ident2"]:
        return u.copy()
    kernel = tables["a1"] if user == 1 else tables["a2"]
    return _sample_rows(kernel[u], rng)


def _candidate_likelihoods(v, own_x, y, cand):
    """Sequence likelihood of every candidate codeword.

    ``v[x_own, u_other, y]`` is the per-letter output law; returns an array
    of shape (len rows of own_x/y batch omitted) x (candidates,).
    """
    like = np.ones(cand.shape[0])
    for t in range(cand.shape[1]):
        like = like * v[own_x[t], cand[:, t], y[t]]
    return like


def _typicality_ok(v, p_other, p_own, xs, ys, cand, eps):
    """Strong-typicality test of every candidate against every sequence pair.

    ``xs``/``ys`` hold a batch of (own input, received) sequences; returns a
    boolean array (batch, candidates).  A candidate is typical when every
    empirical symbol-triple frequency stays within a relative eps of the
    design law (and never appears where the law is zero).
    """
    n_x, n_u, n_y = v.shape
    n = cand.shape[1]
    n_sym = n_u * n_x * n_y
    ref = (p_other[None, :, None] * p_own[:, None, None] * v).transpose(1, 0, 2).ravel()
    base = xs * n_y + ys  # (batch, n) combined own/received code
    offsets = np.arange(xs.shape[0]) * n_sym
    ok = np.empty((xs.shape[0], cand.shape[0]), dtype=bool)
    for j in range(cand.shape[0]):
        codes = cand[j][None, :] * (n_x * n_y) + base
        counts = np.bincount((codes + offsets[:, None]).ravel(),
                             minlength=xs.shape[0] * n_sym)
        emp = counts.reshape(xs.shape[0], n_sym) / n
        ok[:, j] = np.all(np.abs(emp - ref) <= eps * ref + 1e-15, axis=1)
    return ok


def decode(system, user, y, own_x):
    """Decode the other user's secret index from (received, own input).

    Maximum-likelihood mode returns the secret index of the likeliest
    candidate, ties broken by the smallest (secret, randomization) pair;
    typicality mode returns the unique typical candidate's secret index or
    ``None`` as a declared decoding failure.
    """
    if user not in (1, 2):
        raise ValueError(f"user must be 1 or 2, got {user!r}")
    y = np.asarray(y, dtype=np.int64)
    own_x = np.asarray(own_x, dtype=np.int64)
    n = system.rates.n
    if y.shape != (n,) or own_x.shape != (n,):
        raise ValueError(f"sequences must have length {n}")
    tables = system._tables()
    other = system.codebooks[2 - user]
    mr = other.table.shape[1]
    cand = other.flat
    v = tables["v1"] if user == 1 else tables["v2"]
    if system.decoder == "ml":
        like = _candidate_likelihoods(v, own_x, y, cand)
        return int(np.argmax(like)) // mr
    p_other = system.prefixes.p_u2.mass if user == 1 else system.prefixes.p_u1.mass
    p_own = tables["p_x1"] if user == 1 else tables["p_x2"]
    ok = _typicality_ok(v, p_other, p_own, own_x[None, :], y[None, :],
                        cand, system.typ_eps)[0]
    hits = np.flatnonzero(ok)
    if len(hits) != 1:
        return None
    return int(hits[0]) // mr


def _decode_map(system, user, xs, ys):
    """Decoded secret index for every (own input, received) sequence pair."""
    tables = system._tables()
    other = system.codebooks[2 - user]
    cand = other.flat
    mr = other.table.shape[1]
    v = tables["v1"] if user == 1 else tables["v2"]
    s = xs.shape[0]
    like = np.ones((s, cand.shape[0]))
    for t in range(xs.shape[1]):
        like *= v[xs[:, t, None], cand[None, :, t], ys[:, t, None]]
    if system.decoder == "ml":
        return np.argmax(like, axis=1) // mr, like
    p_other = system.prefixes.p_u2.mass if user == 1 else system.prefixes.p_u1.mass
    p_own = tables["p_x1"] if user == 1 else tables["p_x2"]
    ok = _typicality_ok(v, p_other, p_own, xs, ys, cand, system.typ_eps)
    unique = ok.sum(axis=1) == 1
    decoded = np.full(s, -1, dtype=np.int64)
    decoded[unique] = np.argmax(ok[unique], axis=1) // mr
    return decoded, like


def _exact_pe(system, user):
    """Exact average decoding-error probability at one user."""
    ch = system.channel
    tables = system._tables()
    n = system.rates.n
    if user == 1:
        nx, ny = ch.size_x1, ch.size_y1
        own_cb, other_cb = system.codebooks
        a = tables["a1"]
        v = tables["v1"]
    else:
        nx, ny = ch.size_x2, ch.size_y2
        other_cb, own_cb = system.codebooks
        a = tables["a2"]
        v = tables["v2"]
    pair = _grid_sequences(nx * ny, n)
    xs = pair // ny
    ys = pair % ny
    decoded, like = _decode_map(system, user, xs, ys)

    own_flat = own_cb.flat
    other_flat = other_cb.flat
    mr_other = other_cb.table.shape[1]
    # Own-sequence weight, averaged over this user's codewords (the decoded
    # message does not depend on which own codeword was sent).
    w_own = np.ones((own_flat.shape[0], xs.shape[0]))
    for t in range(n):
        w_own *= a[own_flat[:, t][:, None], xs[:, t][None, :]]
    wbar = w_own.mean(axis=0)

    truth = np.arange(other_flat.shape[0]) // mr_other
    err = decoded[:, None] != truth[None, :]
    # like[s, j] is p(y, x_own | other codeword j); weight by own sequence law
    return float((wbar[:, None] * like * err).sum() / other_flat.shape[0])


def _exact_secret_z_joint(system):
    """Exact joint law of (secret 1, secret 2, z-sequence)."""
    ch = system.channel
    tables = system._tables()
    r = system.rates
    n = r.n
    wz = tables["wz"]
    zq = _grid_sequences(ch.size_z, n)
    cb1, cb2 = system.codebooks
    u1 = cb1.flat
    u2 = cb2.flat
    m1, m2 = u1.shape[0], u2.shape[0]
    joint = np.zeros((r.m1s, r.m2s, zq.shape[0]))
    for i in range(m1):
        q = np.ones((m2, zq.shape[0]))
        for t in range(n):
            q *= wz[u1[i, t], u2[:, t][:, None], zq[:, t][None, :]]
        w1s = i // r.m1r
        for w2s in range(r.m2s):
            rows = q[w2s * r.m2r:(w2s + 1) * r.m2r]
            joint[w1s, w2s] += rows.sum(axis=0)
    joint /= m1 * m2
    return joint


def _entropy_of(p):
    flat = p.ravel()
    nz = flat[flat > 0]
    return float(-(nz * np.log2(nz)).sum())


def _leak_from_joint(joint, axis_other):
    m = joint.sum(axis=axis_other)  # (secret, z)
    h_s = _entropy_of(m.sum(axis=1))
    h_z = _entropy_of(m.sum(axis=0))
    return max(0.0, h_s + h_z - _entropy_of(m))


def exact_evaluation(system, budget=None):
    """Exact leakage rates and error probabilities by full enumeration.

    Induces the exact joint law of (secret 1, secret 2, Z^n) under uniform
    messages and randomization, and averages decoding errors over
    codewords, prefix noise and the channel.  Raises a budget error when
    the enumeration would be too large; Monte-Carlo is the fallback.
    """
    limit = resolve_budget(budget, DEFAULT_ENUM_BUDGET)
    required = system.enumeration_cost()
    if required > limit:
        raise BudgetExceededError(
            f"exact evaluation needs {required} terms, budget is {limit}; "
            "use simulate_trials instead",
            required=required,
        )
    joint = _exact_secret_z_joint(system)
    n = system.rates.n
    leak1 = _leak_from_joint(joint, axis_other=1) / n
    leak2 = _leak_from_joint(joint, axis_other=0) / n
    pe1 = _exact_pe(system, user=1)
    pe2 = _exact_pe(system, user=2)
    rates = system.rates.as_dict()
    return LeakageReport(
        n=n, rates=rates, quantized_rates=rates, decoder=system.decoder,
        seed=system.seed, leak1=leak1, leak2=leak2, pe1=pe1, pe2=pe2,
        method="exact",
    )


def simulate_trials(system, trials, seed=0):
    """Monte-Carlo estimate of the leakage report.

    Error probabilities are empirical frequencies; leakage is the plug-in
    mutual information of the empirical (secret, z-sequence) histogram
    divided by n, which is biased upward for small trial counts (the
    histogram over-resolves sparse cells).  All randomness derives from
    ``seed`` in a fixed draw order, so reports are reproducible and
    independent of any scheduling.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    ch = system.channel
    r = system.rates
    n = r.n
    tables = system._tables()
    rng = np.random.default_rng(seed)
    cb1, cb2 = system.codebooks

    w1s = rng.integers(r.m1s, size=trials)
    w1r = rng.integers(r.m1r, size=trials)
    w2s = rng.integers(r.m2s, size=trials)
    w2r = rng.integers(r.m2r, size=trials)
    u1 = cb1.table[w1s, w1r]
    u2 = cb2.table[w2s, w2r]
    x1 = u1 if tables["ident1"] else _sample_rows(tables["a1"][u1], rng)
    x2 = u2 if tables["ident2"] else _sample_rows(tables["a2"][u2], rng)

    out_flat = ch.transition.reshape(ch.size_x1, ch.size_x2, -1)
    flat_draw = _sample_rows(out_flat[x1, x2], rng)
    z = flat_draw % ch.size_z
    y2 = (flat_draw // ch.size_z) % ch.size_y2
    y1 = flat_draw // (ch.size_z * ch.size_y2)

    err1 = 0
    err2 = 0
    chunk = max(1, (1 << 22) // max(1, len(cb2.flat) * n))
    for s in range(0, trials, chunk):
        e = min(s + chunk, trials)
        d1, _ = _decode_map(system, 1, x1[s:e], y1[s:e])
        d2, _ = _decode_map(system, 2, x2[s:e], y2[s:e])
        err1 += int((d1 != w2s[s:e]).sum())
        err2 += int((d2 != w1s[s:e]).sum())
    pe1 = err1 / trials
    pe2 = err2 / trials

    zn = ch.size_z ** n
    if zn <= _MAX_EMPIRICAL_Z:
        z_code = np.zeros(trials, dtype=np.int64)
        for t in range(n):
            z_code = z_code * ch.size_z + z[:, t]
        leak1 = _plugin_leak(w1s, z_code, r.m1s, zn) / n
        leak2 = _plugin_leak(w2s, z_code, r.m2s, zn) / n
    else:
        leak1 = float("nan")
        leak2 = float("nan")

    rates = system.rates.as_dict()
    return LeakageReport(
        n=n, rates=rates, quantized_rates=rates, decoder=system.decoder,
        seed=seed, leak1=leak1, leak2=leak2, pe1=pe1, pe2=pe2,
        method="monte_carlo", trials=trials,
    )


def _plugin_leak(secrets, z_code, m_s, zn):
    hist = np.zeros((m_s, zn))
    np.add.at(hist, (secrets, z_code), 1.0)
    hist /= hist.sum()
    return _leak_from_joint(hist[:, None, :], axis_other=1)


def evaluate_codebook_average(ch, prefixes, rates, k=8, base_seed=0,
                              decoder="ml", typ_eps=0.1, budget=None):
    """Exact reports for ``k`` seeded codebooks plus their mean figures.

    Secrecy guarantees hold on average over the codebook ensemble; this
    averages a few realized codebooks (seeds base_seed .. base_seed+k-1)
    and also returns the per-seed reports so spread stays visible.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    reports = []
    for i in range(k):
        system = build_system(ch, prefixes, rates, seed=base_seed + i,
                              decoder=decoder, typ_eps=typ_eps, budget=budget)
        reports.append(exact_evaluation(system, budget=budget))
    mean = LeakageReport(
        n=rates.n, rates=reports[0].rates, quantized_rates=reports[0].quantized_rates,
        decoder=decoder, seed=base_seed,
        leak1=float(np.mean([r.leak1 for r in reports])),
        leak2=float(np.mean([r.leak2 for r in reports])),
        pe1=float(np.mean([r.pe1 for r in reports])),
        pe2=float(np.mean([r.pe2 for r in reports])),
        method="exact_codebook_average",
    )
    return mean, reports
