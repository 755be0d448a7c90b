"""Secrecy-rate bounds and rate regions for two-way wiretap channels.

A rate region is represented by the Pareto frontier of its convex closure:
an axis-sorted list of non-dominated vertices.  Every generated rate pair
carries rectangle semantics -- achieving (a, b) achieves the whole box
[0,a] x [0,b] -- except in joint-secrecy regions, where a sum cap clips the
box to a pentagon.

Region sweeps walk uniform grids over the relevant probability simplices
(optionally polished by coordinate descent), evaluate the bound formulas in
vectorized batches, and convex-close the resulting corner cloud.  Sweeps are
pure per sample, so chunks can be dispatched to worker threads.
"""

import csv
import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .channels import (
    GaussianTWC,
    check_stochastic_degradedness,
    is_same_output,
    output_marginals_equal,
)
from .config import DEFAULT_SWEEP_BUDGET, resolve_budget
from .exceptions import BudgetExceededError, PreconditionError
from .infocalc import (
    ConditionalKernel,
    Pmf,
    binary_convolve,
    binary_entropy,
    conditional_mutual_information,
    joint_from_components,
    mutual_information,
)

_CHUNK = 1 << 16


# --------------------------------------------------------------------------
# Rate points and regions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RatePoint:
    """A pair of secrecy rates in bits per channel use; negatives clamp to 0."""

    r1s: float
    r2s: float

    def __post_init__(self):
        object.__setattr__(self, "r1s", max(0.0, float(self.r1s)))
        object.__setattr__(self, "r2s", max(0.0, float(self.r2s)))


class RegionKind(str, Enum):
    INNER_INDIVIDUAL = "inner_individual"
    INNER_JOINT = "inner_joint"
    OUTER_INDIVIDUAL = "outer_individual"
    CAPACITY = "capacity"
    RELIABILITY = "reliability"


# CSV labelling: region kind -> (secrecy criterion, bound flavour).
_KIND_LABELS = {
    RegionKind.INNER_INDIVIDUAL: ("individual", "inner"),
    RegionKind.INNER_JOINT: ("joint", "inner"),
    RegionKind.OUTER_INDIVIDUAL: ("individual", "outer"),
    RegionKind.CAPACITY: ("individual", "capacity"),
    RegionKind.RELIABILITY: ("reliability", "exact"),
}


class RateRegion:
    """Convex-closed rate region stored as its Pareto frontier.

    ``frontier`` is sorted by increasing r1s with strictly decreasing r2s
    and is concave; the region is the set of non-negative pairs dominated
    by the frontier.  ``generators`` optionally records, per frontier
    vertex, a descriptor of the input distribution that produced it.
    """

    __slots__ = ("frontier", "kind", "generators")

    def __init__(self, frontier, kind=None, generators=None):
        frontier = tuple(frontier)
        if not frontier:
            raise ValueError("a region needs at least one frontier point")
        for a, b in zip(frontier, frontier[1:]):
            if not (b.r1s > a.r1s and b.r2s < a.r2s):
                raise ValueError(
                    "frontier must be sorted by increasing r1s with strictly "
                    f"decreasing r2s; got {a} before {b}"
                )
        self.frontier = frontier
        self.kind = RegionKind(kind) if kind is not None else None
        self.generators = tuple(generators) if generators is not None else None

    @property
    def max_r1s(self):
        return self.frontier[-1].r1s

    @property
    def max_r2s(self):
        return self.frontier[0].r2s

    @property
    def max_sum(self):
        return max(v.r1s + v.r2s for v in self.frontier)

    def frontier_value(self, x):
        """The frontier height above r1s = x (``-inf`` beyond max_r1s)."""
        vs = self.frontier
        if x <= vs[0].r1s:
            return vs[0].r2s
        for a, b in zip(vs, vs[1:]):
            if x <= b.r1s:
                t = (x - a.r1s) / (b.r1s - a.r1s)
                return a.r2s + t * (b.r2s - a.r2s)
        return float("-inf")

    def contains(self, point, tol=1e-12):
        x, y = max(0.0, point.r1s), max(0.0, point.r2s)
        if x > self.max_r1s + tol:
            return False
        return y <= self.frontier_value(min(x, self.max_r1s)) + tol

    def boundary(self):
        """Upper-right boundary polyline, axis endpoints included."""
        pts = [(0.0, self.frontier[0].r2s)]
        pts += [(v.r1s, v.r2s) for v in self.frontier]
        pts.append((self.frontier[-1].r1s, 0.0))
        out = [pts[0]]
        for p in pts[1:]:
            if p != out[-1]:
                out.append(p)
        return out

    def area(self):
        """Area of the region inside the non-negative quadrant."""
        poly = [(0.0, 0.0)] + self.boundary()
        s = 0.0
        for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]):
            s += x0 * y1 - x1 * y0
        return abs(s) / 2.0

    def __repr__(self):
        kind = self.kind.value if self.kind else "custom"
        return f"RateRegion({kind}, {len(self.frontier)} vertices, max=({self.max_r1s:.6g}, {self.max_r2s:.6g}))"


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_closure(points, kind=None, generators=None):
    """Convex closure of a union of rectangles given by their corners.

    Each input point stands for the box [0, r1s] x [0, r2s]; the result is
    the Pareto frontier of the convex hull of the union of those boxes.
    ``generators`` is an optional parallel sequence of descriptors;
    descriptors of surviving vertices are attached to the region.
    """
    pts = [RatePoint(p.r1s, p.r2s) if isinstance(p, RatePoint) else RatePoint(*p)
           for p in points]
    if not pts:
        raise ValueError("convex_closure needs at least one point")
    if generators is not None and len(generators) != len(pts):
        raise ValueError("generators must parallel points")

    arr = np.array([(p.r1s, p.r2s) for p in pts])
    # Pareto filter: scan by decreasing r1s keeping strict r2s records.
    order = np.lexsort((-arr[:, 1], -arr[:, 0]))
    best = -np.inf
    keep = []
    for i in order:
        if arr[i, 1] > best:
            keep.append(int(i))
            best = arr[i, 1]
    keep.reverse()  # increasing r1s, strictly decreasing r2s

    if len(keep) > 1:
        x_max = arr[keep[-1], 0]
        y_max = arr[keep[0], 1]
        eps = 1e-14 * max(1.0, x_max, y_max) ** 2
        seq = [(arr[i, 0], arr[i, 1], i) for i in keep]
        # Axis anchors close the hull; skip them when a vertex already sits
        # on the axis so it is not shadowed.
        if seq[0][0] > 0.0:
            seq.insert(0, (0.0, y_max, None))
        if seq[-1][1] > 0.0:
            seq.append((x_max, 0.0, None))
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) >= -eps:
                chain.pop()
            chain.append(p)
        keep = [i for _, _, i in chain if i is not None]

    frontier = [pts[i] for i in keep]
    gen = [generators[i] for i in keep] if generators is not None else None
    return RateRegion(frontier, kind=kind, generators=gen)


def region_contains(region, point, tol=1e-12):
    """True when ``point`` lies inside ``region`` (within ``tol``)."""
    return region.contains(point, tol=tol)


def region_area(region):
    """Area under the region frontier in the non-negative quadrant."""
    return region.area()


def frontier_exceedance(inner, outer):
    """Max amount by which ``inner``'s frontier pokes outside ``outer``.

    Per vertex the violation is the larger of the r1s overshoot beyond
    ``outer.max_r1s`` and the height above the outer frontier at the
    clipped abscissa; non-positive means containment.  Checking vertices
    suffices because both regions are convex.
    """
    worst = -math.inf
    for v in inner.frontier:
        dx = v.r1s - outer.max_r1s
        dy = v.r2s - outer.frontier_value(min(v.r1s, outer.max_r1s))
        worst = max(worst, dx, dy)
    return worst


def _point_polyline_distance(points, polyline):
    pts = np.asarray(points, dtype=float)
    best = np.full(len(pts), np.inf)
    for (ax, ay), (bx, by) in zip(polyline, polyline[1:]):
        a = np.array([ax, ay])
        d = np.array([bx - ax, by - ay])
        denom = float(d @ d)
        if denom == 0.0:
            proj = np.zeros(len(pts))
        else:
            proj = np.clip((pts - a) @ d / denom, 0.0, 1.0)
        closest = a + proj[:, None] * d
        best = np.minimum(best, np.linalg.norm(pts - closest, axis=1))
    if len(polyline) == 1:
        best = np.linalg.norm(pts - np.array(polyline[0]), axis=1)
    return best


def _sample_polyline(polyline, per_segment=33):
    samples = [polyline[0]]
    for (ax, ay), (bx, by) in zip(polyline, polyline[1:]):
        ts = np.linspace(0.0, 1.0, per_segment)[1:]
        samples.extend((ax + t * (bx - ax), ay + t * (by - ay)) for t in ts)
    return samples


def hausdorff_distance(region_a, region_b, per_segment=33):
    """Symmetric Hausdorff distance between two frontier boundaries.

    Each boundary is sampled densely along its segments; the quoted value
    is the max over both directed sample-to-polyline distances.
    """
    pa = region_a.boundary()
    pb = region_b.boundary()
    d_ab = _point_polyline_distance(_sample_polyline(pa, per_segment), pb).max()
    d_ba = _point_polyline_distance(_sample_polyline(pb, per_segment), pa).max()
    return float(max(d_ab, d_ba))


# --------------------------------------------------------------------------
# Input parametrizations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PrefixedInputs:
    """Independent codeword distributions with per-user prefix kernels.

    The induced input law is p(u1) p(u2) p(x1|u1) p(x2|u2); the prefix
    kernels realize cooperative jamming by randomizing each user's channel
    input given its codeword symbol.  Codeword alphabets may exceed the
    input alphabets by at most one symbol.
    """

    p_u1: Pmf
    p_u2: Pmf
    k_x1: ConditionalKernel
    k_x2: ConditionalKernel

    def __post_init__(self):
        for pu, k, tag in ((self.p_u1, self.k_x1, "1"), (self.p_u2, self.k_x2, "2")):
            if pu.ndim != 1:
                raise ValueError(f"p_u{tag} must be a single-axis pmf")
            if k.from_dims != pu.dims:
                raise ValueError(
                    f"k_x{tag} conditions on {k.from_dims}, p_u{tag} has {pu.dims}"
                )
            if len(k.to_dims) != 1:
                raise ValueError(f"k_x{tag} must map to a single input axis")
            if pu.dims[0] > k.to_dims[0] + 1:
                raise ValueError(
                    f"|U{tag}| = {pu.dims[0]} exceeds |X{tag}| + 1 = {k.to_dims[0] + 1}"
                )

    @classmethod
    def identity(cls, p_x1, p_x2):
        """No prefixing: the codeword symbol is the channel input."""
        p_x1 = p_x1 if isinstance(p_x1, Pmf) else Pmf(p_x1)
        p_x2 = p_x2 if isinstance(p_x2, Pmf) else Pmf(p_x2)
        return cls(p_x1, p_x2,
                   ConditionalKernel.identity(p_x1.dims[0]),
                   ConditionalKernel.identity(p_x2.dims[0]))

    def joint(self, ch):
        """Joint pmf over (U1, U2, X1, X2, Y1, Y2, Z)."""
        return joint_from_components(self.p_u1, self.p_u2, self.k_x1, self.k_x2, ch)


@dataclass(frozen=True)
class TimeSharedInputs:
    """A time-sharing variable Q with (possibly correlated) inputs given Q."""

    p_q: Pmf
    k_x: ConditionalKernel  # Q -> (X1, X2)

    def __post_init__(self):
        if self.p_q.ndim != 1:
            raise ValueError("p_q must be a single-axis pmf")
        if self.k_x.from_dims != self.p_q.dims or len(self.k_x.to_dims) != 2:
            raise ValueError("k_x must map Q to the (X1, X2) pair")


@dataclass(frozen=True)
class GeneralOuterAuxiliaries:
    """Two-layer auxiliary structure for the general-channel outer bound.

    A common layer U, two conditionally independent per-user layers V1 and
    V2 given U, and an input kernel p(x1, x2 | u, v1, v2).
    """

    p_u: Pmf
    k_v1: ConditionalKernel  # U -> V1
    k_v2: ConditionalKernel  # U -> V2
    k_x: ConditionalKernel   # (U, V1, V2) -> (X1, X2)

    def __post_init__(self):
        if self.p_u.ndim != 1:
            raise ValueError("p_u must be a single-axis pmf")
        for k, tag in ((self.k_v1, "k_v1"), (self.k_v2, "k_v2")):
            if k.from_dims != self.p_u.dims or len(k.to_dims) != 1:
                raise ValueError(f"{tag} must map U to a single auxiliary axis")
        expected = self.p_u.dims + self.k_v1.to_dims + self.k_v2.to_dims
        if self.k_x.from_dims != expected or len(self.k_x.to_dims) != 2:
            raise ValueError(
                f"k_x must map {expected} to the (X1, X2) pair, "
                f"got {self.k_x.from_dims} -> {self.k_x.to_dims}"
            )


@dataclass(frozen=True)
class PowerSplit:
    """Fractions of each user's power spent on jamming rather than signal."""

    alpha: float
    beta: float

    def __post_init__(self):
        for field in ("alpha", "beta"):
            v = getattr(self, field)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"PowerSplit.{field} must be in [0,1], got {v!r}")


# --------------------------------------------------------------------------
# Rectangle evaluators at a fixed distribution
# --------------------------------------------------------------------------

# Axis layout of the seven-variable joint built by PrefixedInputs.joint.
_U1, _U2, _X1, _X2, _Y1, _Y2, _Z = range(7)


def inner_rect_individual(ch, inputs):
    """Achievable rectangle corner for individual secrecy at one input law.

    Each user's cap is its secure rate through the legitimate channel minus
    the eavesdropper's direct take, minus a penalty when the other user's
    codebook information at the eavesdropper exceeds what the legitimate
    decoder can strip; negatives clamp to zero.
    """
    j = inputs.joint(ch)
    cmi = conditional_mutual_information
    i_u1_y2 = cmi(j, [_U1], [_Y2], [_X2])
    i_u2_y1 = cmi(j, [_U2], [_Y1], [_X1])
    i_u1_z = mutual_information(j, [_U1], [_Z])
    i_u2_z = mutual_information(j, [_U2], [_Z])
    i_u2_z_u1 = cmi(j, [_U2], [_Z], [_U1])
    i_u1_z_u2 = cmi(j, [_U1], [_Z], [_U2])
    r1 = i_u1_y2 - i_u1_z - max(0.0, i_u2_z_u1 - i_u2_y1)
    r2 = i_u2_y1 - i_u2_z - max(0.0, i_u1_z_u2 - i_u1_y2)
    return RatePoint(r1, r2)


def inner_rect_symmetric_output(ch, p_x1, p_x2):
    """Rectangle corner for channels whose three outputs coincide.

    With y1 = y2 = z the prefix penalty vanishes and the caps reduce to
    I(X1;Y2|X2) - I(X1;Z) and I(X2;Y1|X1) - I(X2;Z).  Equality of the three
    output marginals suffices: the caps only see each output's own marginal.
    """
    if not output_marginals_equal(ch):
        raise PreconditionError(
            "channel outputs are not symmetric: the three conditional output "
            "marginals differ")
    p_x1 = p_x1 if isinstance(p_x1, Pmf) else Pmf(p_x1)
    p_x2 = p_x2 if isinstance(p_x2, Pmf) else Pmf(p_x2)
    px = p_x1.mass[:, None] * p_x2.mass[None, :]
    t = _pair_terms(ch.transition, px[None])
    r1 = float(t["i_x1_y2_g_x2"][0] - t["i_x1_z"][0])
    r2 = float(t["i_x2_y1_g_x1"][0] - t["i_x2_z"][0])
    return RatePoint(r1, r2)


def outer_rect_general(ch, aux):
    """General-channel outer-bound rectangle at fixed two-layer auxiliaries.

    Evaluation only: searching the auxiliary space at its full cardinality
    bounds is combinatorially out of reach, so callers supply the layers.
    """
    t = ch.transition
    if aux.k_x.to_dims != (ch.size_x1, ch.size_x2):
        raise PreconditionError(
            f"auxiliaries feed inputs {aux.k_x.to_dims}, channel expects "
            f"{(ch.size_x1, ch.size_x2)}"
        )
    joint = np.einsum(
        "u,ua,ub,uabcd,cdefg->uabcdefg",
        aux.p_u.mass, aux.k_v1.table, aux.k_v2.table, aux.k_x.table, t,
    )
    j = Pmf(joint)
    u, v1, v2, x1, x2, y1, y2, z = range(8)
    cmi = conditional_mutual_information
    r1 = cmi(j, [v1], [x2, y2], [u]) - cmi(j, [v1], [z], [u])
    r2 = cmi(j, [v2], [x1, y1], [u]) - cmi(j, [v2], [z], [u])
    return RatePoint(r1, r2)


def outer_rect_time_shared(ch, ts):
    """Outer-bound rectangle with a time-sharing variable Q.

    The corner is the Q-average of per-letter corners, so the sweep in
    :func:`outer_region_individual` realizes the same region through its
    convex hull without enumerating Q.
    """
    if ts.k_x.to_dims != (ch.size_x1, ch.size_x2):
        raise PreconditionError(
            f"time-shared inputs feed {ts.k_x.to_dims}, channel expects "
            f"{(ch.size_x1, ch.size_x2)}"
        )
    if ts.p_q.dims[0] > ch.size_x1 * ch.size_x2 + 1:
        raise PreconditionError(
            f"|Q| = {ts.p_q.dims[0]} exceeds |X1||X2| + 1 = "
            f"{ch.size_x1 * ch.size_x2 + 1}"
        )
    joint = np.einsum("q,qab,abefg->qabefg", ts.p_q.mass, ts.k_x.table, ch.transition)
    j = Pmf(joint)
    q, x1, x2, y1, y2, z = range(6)
    cmi = conditional_mutual_information
    r1 = cmi(j, [x1], [y2], [x2, q]) - cmi(j, [x1], [z], [q])
    r2 = cmi(j, [x2], [y1], [x1, q]) - cmi(j, [x2], [z], [q])
    return RatePoint(r1, r2)


# --------------------------------------------------------------------------
# Vectorized sweep machinery
# --------------------------------------------------------------------------

def simplex_grid(ncells, resolution, budget=None):
    """Uniform grid on the probability simplex with ``ncells`` outcomes.

    Entries are multiples of 1/(resolution-1); the row count is
    C(resolution-2+ncells, ncells-1), checked against the sweep budget
    before any enumeration happens.
    """
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    if ncells < 1:
        raise ValueError(f"ncells must be >= 1, got {ncells}")
    if ncells == 1:
        return np.ones((1, 1))
    m = resolution - 1
    count = math.comb(m + ncells - 1, ncells - 1)
    limit = resolve_budget(budget, DEFAULT_SWEEP_BUDGET)
    if count > limit:
        raise BudgetExceededError(
            f"simplex grid would hold {count} points, budget is {limit}",
            required=count,
        )
    k = ncells - 1
    combos = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(m + k), k)),
        dtype=np.int64,
        count=count * k,
    ).reshape(count, k)
    upper = np.concatenate([combos, np.full((count, 1), m + k, dtype=np.int64)], axis=1)
    lower = np.concatenate([np.full((count, 1), -1, dtype=np.int64), combos], axis=1)
    return (upper - lower - 1).astype(float) / m


def _entropy_cols(p):
    """Entropies of a batch: p has shape (K, ...), returns (K,) in bits."""
    flat = p.reshape(p.shape[0], -1)
    with np.errstate(divide="ignore", invalid="ignore"):
        contrib = flat * np.log2(flat)
    return -np.nansum(contrib, axis=1)


def _pair_terms(tensor, px_batch):
    """Mutual-information terms for a batch of input pair distributions.

    ``px_batch`` has shape (K, |X1|, |X2|).  Returns the conditional and
    plain informations between inputs and the three outputs needed by every
    bound formula, each as a (K,) array.
    """
    ty1 = tensor.sum(axis=(3, 4))
    ty2 = tensor.sum(axis=(2, 4))
    tz = tensor.sum(axis=(2, 3))

    h_x1x2 = _entropy_cols(px_batch)
    h_x1 = _entropy_cols(px_batch.sum(axis=2))
    h_x2 = _entropy_cols(px_batch.sum(axis=1))

    jz = px_batch[..., None] * tz[None]
    h_x1x2z = _entropy_cols(jz)
    h_z = _entropy_cols(jz.sum(axis=(1, 2)))
    h_x1z = _entropy_cols(jz.sum(axis=2))
    h_x2z = _entropy_cols(jz.sum(axis=1))

    jy2 = px_batch[..., None] * ty2[None]
    h_x1x2y2 = _entropy_cols(jy2)
    h_x2y2 = _entropy_cols(jy2.sum(axis=1))

    jy1 = px_batch[..., None] * ty1[None]
    h_x1x2y1 = _entropy_cols(jy1)
    h_x1y1 = _entropy_cols(jy1.sum(axis=2))

    return {
        "i_x1_y2_g_x2": h_x1x2 + h_x2y2 - h_x1x2y2 - h_x2,
        "i_x2_y1_g_x1": h_x1x2 + h_x1y1 - h_x1x2y1 - h_x1,
        "i_x1_z": h_x1 + h_z - h_x1z,
        "i_x2_z": h_x2 + h_z - h_x2z,
        "i_x2_z_g_x1": h_x1x2 + h_x1z - h_x1x2z - h_x1,
        "i_x1_z_g_x2": h_x1x2 + h_x2z - h_x1x2z - h_x2,
        "i_x1x2_z": h_x1x2 + h_z - h_x1x2z,
    }


def _map_chunks(fn, total, threads=None):
    """Apply ``fn(start, stop)`` over chunked ranges, optionally threaded."""
    spans = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    if threads and threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda sp: fn(*sp), spans))
    return [fn(*sp) for sp in spans]


def _product_batch(p1_grid, p2_grid, start, stop):
    n2 = len(p2_grid)
    idx = np.arange(start, stop)
    i = idx // n2
    j = idx % n2
    return p1_grid[i][:, :, None] * p2_grid[j][:, None, :], i, j


def _inner_corner_arrays(t):
    pen1 = np.maximum(0.0, t["i_x2_z_g_x1"] - t["i_x2_y1_g_x1"])
    pen2 = np.maximum(0.0, t["i_x1_z_g_x2"] - t["i_x1_y2_g_x2"])
    r1 = t["i_x1_y2_g_x2"] - t["i_x1_z"] - pen1
    r2 = t["i_x2_y1_g_x1"] - t["i_x2_z"] - pen2
    return np.maximum(0.0, r1), np.maximum(0.0, r2)


def _outer_corner_arrays(t):
    r1 = t["i_x1_y2_g_x2"] - t["i_x1_z"]
    r2 = t["i_x2_y1_g_x1"] - t["i_x2_z"]
    return np.maximum(0.0, r1), np.maximum(0.0, r2)


def _pentagon_vertices(a, b, s):
    """Pareto vertices of {r1 <= a, r2 <= b, r1 + r2 <= s} in the quadrant."""
    a, b, s = max(0.0, a), max(0.0, b), max(0.0, s)
    if s >= a + b:
        return [(a, b)]
    rx = min(a, s)
    ry = min(b, s)
    v1 = (rx, min(b, s - rx))
    v2 = (min(a, s - ry), ry)
    return [v1] if v1 == v2 else [v1, v2]


def _check_symmetric_marginals(ch):
    if not output_marginals_equal(ch):
        raise PreconditionError(
            "channel is not output-symmetric: the three conditional output "
            "marginals differ"
        )


def _check_class(ch, channel_class):
    if channel_class == "same_output":
        if not is_same_output(ch):
            raise PreconditionError(
                "channel is not in the same-output class: converse arguments "
                "need y1 = y2 = z as the same symbol"
            )
        return
    if channel_class == "eavesdropper_degraded":
        for out in ("y1", "y2"):
            verdict = check_stochastic_degradedness(ch, out)
            if not verdict.feasible:
                raise PreconditionError(
                    f"z is not a stochastically degraded version of {out} "
                    f"(residual {verdict.residual:.3g}); Markov chain "
                    f"{out} -> z fails"
                )
        return
    raise ValueError(
        f'channel_class must be "same_output" or "eavesdropper_degraded", '
        f"got {channel_class!r}"
    )


def inner_region_individual(ch, resolution=101, prefix_mode="identity",
                            prefix_cardinality=None, refine=False,
                            budget=None, threads=None):
    """Achievable individual-secrecy region by sweeping input distributions.

    ``prefix_mode="identity"`` sweeps product input laws p(x1)p(x2) on a
    uniform simplex grid (the fast sweep every example channel needs);
    ``"full"`` additionally grids the prefix kernels with codeword
    alphabets of size |X_i|+1 (override via ``prefix_cardinality``), which
    multiplies the free parameters, so keep the resolution small.  The
    sampled region grows with resolution on nested grids.
    """
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    if prefix_mode == "identity":
        corners, descriptors = _sweep_inner_identity(ch, resolution, budget, threads)
        if refine:
            corners, descriptors = _refine_product(
                ch, corners, descriptors, resolution, _inner_corner_arrays)
    elif prefix_mode == "full":
        corners, descriptors = _sweep_inner_full(
            ch, resolution, prefix_cardinality, budget)
    else:
        raise ValueError(f'prefix_mode must be "identity" or "full", got {prefix_mode!r}')
    return convex_closure(corners, kind=RegionKind.INNER_INDIVIDUAL,
                          generators=descriptors)


def _sweep_inner_identity(ch, resolution, budget, threads):
    limit = resolve_budget(budget, DEFAULT_SWEEP_BUDGET)
    p1_grid = simplex_grid(ch.size_x1, resolution, budget=limit)
    p2_grid = simplex_grid(ch.size_x2, resolution, budget=limit)
    total = len(p1_grid) * len(p2_grid)
    if total > limit:
        raise BudgetExceededError(
            f"identity-prefix sweep needs {total} samples, budget is {limit}",
            required=total,
        )
    tensor = ch.transition

    def work(start, stop):
        px, i, j = _product_batch(p1_grid, p2_grid, start, stop)
        r1, r2 = _inner_corner_arrays(_pair_terms(tensor, px))
        return r1, r2, i, j

    parts = _map_chunks(work, total, threads)
    r1 = np.concatenate([p[0] for p in parts])
    r2 = np.concatenate([p[1] for p in parts])
    ii = np.concatenate([p[2] for p in parts])
    jj = np.concatenate([p[3] for p in parts])
    corners = list(zip(r1, r2))
    descriptors = _ProductDescriptors(p1_grid, p2_grid, ii, jj)
    return corners, descriptors


class _ProductDescriptors:
    """Lazy per-sample descriptors for a product-distribution sweep."""

    def __init__(self, p1_grid, p2_grid, i, j):
        self.p1_grid, self.p2_grid, self.i, self.j = p1_grid, p2_grid, i, j

    def __len__(self):
        return len(self.i)

    def __getitem__(self, k):
        return {
            "p_x1": [float(v) for v in self.p1_grid[self.i[k]]],
            "p_x2": [float(v) for v in self.p2_grid[self.j[k]]],
        }


class _ListDescriptors:
    def __init__(self, items):
        self.items = items

    def __len__(self):
        return len(self.items)

    def __getitem__(self, k):
        return self.items[k]


def _kernel_grid(n_rows, n_out, resolution, budget):
    """All row-stochastic kernels with rows on the simplex grid."""
    rows = simplex_grid(n_out, resolution, budget=budget)
    n = len(rows)
    total = n ** n_rows
    combos = np.stack(np.meshgrid(*[np.arange(n)] * n_rows, indexing="ij"),
                      axis=-1).reshape(total, n_rows)
    return rows[combos]  # (total, n_rows, n_out)


def _sweep_inner_full(ch, resolution, prefix_cardinality, budget):
    limit = resolve_budget(budget, DEFAULT_SWEEP_BUDGET)
    sizes = (ch.size_x1, ch.size_x2)
    if prefix_cardinality is None:
        cards = (sizes[0] + 1, sizes[1] + 1)
    else:
        cards = tuple(prefix_cardinality)
        if len(cards) != 2 or any(c < 1 for c in cards):
            raise ValueError("prefix_cardinality must be two positive sizes")
    per_user = []
    for card, nx in zip(cards, sizes):
        pu = simplex_grid(card, resolution, budget=limit)
        kx = _kernel_grid(card, nx, resolution, budget=limit)
        count = len(pu) * len(kx)
        per_user.append((pu, kx, count))
    total = per_user[0][2] * per_user[1][2]
    if total > limit:
        raise BudgetExceededError(
            f"full-prefix sweep needs {total} samples, budget is {limit}; "
            "lower the resolution or use identity prefixes",
            required=total,
        )
    tensor = ch.transition
    pu1, kx1, c1 = per_user[0]
    pu2, kx2, c2 = per_user[1]

    corners = []
    indices = []
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop)
        a = idx // c2
        b = idx % c2
        i1, j1 = a // len(kx1), a % len(kx1)
        i2, j2 = b // len(kx2), b % len(kx2)
        joint = np.einsum(
            "ka,kb,kac,kbd,cdefg->kabcdefg",
            pu1[i1], pu2[i2], kx1[j1], kx2[j2], tensor,
        )
        r1, r2 = _inner_corners_from_joint(joint)
        corners.extend(zip(r1, r2))
        indices.append((i1, j1, i2, j2))

    descriptors = _ListDescriptors([
        {
            "p_u1": [float(v) for v in pu1[i]],
            "k_x1": [[float(v) for v in row] for row in kx1[j]],
            "p_u2": [float(v) for v in pu2[k]],
            "k_x2": [[float(v) for v in row] for row in kx2[m]],
        }
        for i1, j1, i2, j2 in indices
        for i, j, k, m in zip(i1, j1, i2, j2)
    ])
    return corners, descriptors


def _joint_subset_entropy(joint, keep):
    drop = tuple(a + 1 for a in range(7) if a not in keep)
    return _entropy_cols(joint.sum(axis=drop) if drop else joint)


def _inner_corners_from_joint(joint):
    """Batched rectangle corners from (K, U1, U2, X1, X2, Y1, Y2, Z) joints."""
    h = _joint_subset_entropy
    h_u1 = h(joint, (_U1,))
    h_u2 = h(joint, (_U2,))
    h_x1 = h(joint, (_X1,))
    h_x2 = h(joint, (_X2,))
    h_z = h(joint, (_Z,))
    h_u1u2 = h(joint, (_U1, _U2))
    h_u1z = h(joint, (_U1, _Z))
    h_u2z = h(joint, (_U2, _Z))
    h_u1u2z = h(joint, (_U1, _U2, _Z))
    i_u1_y2 = (h(joint, (_U1, _X2)) + h(joint, (_X2, _Y2))
               - h(joint, (_U1, _X2, _Y2)) - h_x2)
    i_u2_y1 = (h(joint, (_U2, _X1)) + h(joint, (_X1, _Y1))
               - h(joint, (_U2, _X1, _Y1)) - h_x1)
    i_u1_z = h_u1 + h_z - h_u1z
    i_u2_z = h_u2 + h_z - h_u2z
    i_u2_z_g_u1 = h_u1u2 + h_u1z - h_u1u2z - h_u1
    i_u1_z_g_u2 = h_u1u2 + h_u2z - h_u1u2z - h_u2
    r1 = i_u1_y2 - i_u1_z - np.maximum(0.0, i_u2_z_g_u1 - i_u2_y1)
    r2 = i_u2_y1 - i_u2_z - np.maximum(0.0, i_u1_z_g_u2 - i_u1_y2)
    return np.maximum(0.0, r1), np.maximum(0.0, r2)


def inner_region_joint_symmetric(ch, resolution=101, budget=None, threads=None):
    """Achievable joint-secrecy region for output-symmetric channels.

    Each product input law contributes a pentagon: the two reliability caps
    plus a sum cap charging the eavesdropper's total take; the region is
    the convex closure of their union.
    """
    _check_symmetric_marginals(ch)
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    limit = resolve_budget(budget, DEFAULT_SWEEP_BUDGET)
    p1_grid = simplex_grid(ch.size_x1, resolution, budget=limit)
    p2_grid = simplex_grid(ch.size_x2, resolution, budget=limit)
    total = len(p1_grid) * len(p2_grid)
    if total > limit:
        raise BudgetExceededError(
            f"joint-secrecy sweep needs {total} samples, budget is {limit}",
            required=total,
        )
    tensor = ch.transition

    def work(start, stop):
        px, i, j = _product_batch(p1_grid, p2_grid, start, stop)
        t = _pair_terms(tensor, px)
        a = np.maximum(0.0, t["i_x1_y2_g_x2"])
        b = np.maximum(0.0, t["i_x2_y1_g_x1"])
        s = a + b - t["i_x1x2_z"]
        return a, b, s, i, j

    corners = []
    descriptors = []
    for a, b, s, ii, jj in _map_chunks(work, total, threads):
        for k in range(len(a)):
            desc = {
                "p_x1": [float(v) for v in p1_grid[ii[k]]],
                "p_x2": [float(v) for v in p2_grid[jj[k]]],
            }
            for v in _pentagon_vertices(float(a[k]), float(b[k]), float(s[k])):
                corners.append(v)
                descriptors.append(desc)
    return convex_closure(corners, kind=RegionKind.INNER_JOINT,
                          generators=_ListDescriptors(descriptors))


def outer_region_individual(ch, channel_class="same_output", resolution=101,
                            refine=False, budget=None, threads=None):
    """Outer bound on the individual-secrecy region for two channel classes.

    Valid when all outputs coincide (``"same_output"``) or when the
    eavesdropper output is stochastically degraded with respect to both
    user outputs (``"eavesdropper_degraded"``); the class is verified
    before any sweeping.  Inputs may be correlated; time sharing is
    subsumed by the convex closure because a time-shared corner is a convex
    combination of per-letter corners.  The sweep walks the joint-input
    simplex grid and additionally every product of the per-user grids, so
    product-law achievability points are sampled exactly.
    """
    _check_class(ch, channel_class)
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    limit = resolve_budget(budget, DEFAULT_SWEEP_BUDGET)
    pair_grid = simplex_grid(ch.size_x1 * ch.size_x2, resolution, budget=limit)
    p1_grid = simplex_grid(ch.size_x1, resolution, budget=limit)
    p2_grid = simplex_grid(ch.size_x2, resolution, budget=limit)
    n_corr = len(pair_grid)
    n_prod = len(p1_grid) * len(p2_grid)
    total = n_corr + n_prod
    if total > limit:
        raise BudgetExceededError(
            f"outer sweep needs {total} samples, budget is {limit}",
            required=total,
        )
    tensor = ch.transition
    shape = (ch.size_x1, ch.size_x2)

    def work(start, stop):
        if stop <= n_corr:
            px = pair_grid[start:stop].reshape(stop - start, *shape)
            tags = np.arange(start, stop)
        elif start >= n_corr:
            px, i, j = _product_batch(p1_grid, p2_grid, start - n_corr, stop - n_corr)
            tags = n_corr + (start - n_corr) + np.arange(stop - start)
        else:
            return work(start, n_corr) + work(n_corr, stop)
        r1, r2 = _outer_corner_arrays(_pair_terms(tensor, px))
        return [(r1, r2, tags)]

    parts = []
    for chunk in _map_chunks(work, total, threads):
        parts.extend(chunk)
    r1 = np.concatenate([p[0] for p in parts])
    r2 = np.concatenate([p[1] for p in parts])
    tags = np.concatenate([p[2] for p in parts])
    corners = list(zip(r1, r2))
    descriptors = _PairDescriptors(pair_grid, p1_grid, p2_grid, tags, shape)

    region = convex_closure(corners, kind=RegionKind.OUTER_INDIVIDUAL,
                            generators=descriptors)
    if refine:
        extra, extra_desc = _refine_correlated(ch, region, resolution)
        all_pts = corners + extra
        all_desc = _ListDescriptors(
            [descriptors[k] for k in range(len(corners))] + extra_desc)
        region = convex_closure(all_pts, kind=RegionKind.OUTER_INDIVIDUAL,
                                generators=all_desc)
    return region


class _PairDescriptors:
    """Descriptors for the correlated + product-augmented outer sweep."""

    def __init__(self, pair_grid, p1_grid, p2_grid, tags, shape):
        self.pair_grid, self.p1_grid, self.p2_grid = pair_grid, p1_grid, p2_grid
        self.tags, self.shape = tags, shape

    def __len__(self):
        return len(self.tags)

    def __getitem__(self, k):
        tag = int(self.tags[k])
        if tag < len(self.pair_grid):
            px = self.pair_grid[tag].reshape(self.shape)
        else:
            t = tag - len(self.pair_grid)
            i, j = t // len(self.p2_grid), t % len(self.p2_grid)
            px = self.p1_grid[i][:, None] * self.p2_grid[j][None, :]
        return {"p_x1x2": [[float(v) for v in row] for row in px]}


# --------------------------------------------------------------------------
# Coordinate-descent refinement
# --------------------------------------------------------------------------

_OBJECTIVES = ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (2.0, 1.0), (1.0, 2.0))


def _descend(blocks, eval_corner, step0, iters=60):
    """Pattern search over a tuple of simplex blocks; returns visited corners."""
    visited = []
    for w in _OBJECTIVES:
        cur = [b.copy() for b in blocks]
        r1, r2 = eval_corner(cur)
        best = w[0] * r1 + w[1] * r2
        visited.append(((r1, r2), [b.copy() for b in cur]))
        h = step0
        for _ in range(iters):
            improved = False
            for bi, block in enumerate(cur):
                for ci in range(len(block)):
                    for sign in (1.0, -1.0):
                        cand = block.copy()
                        cand[ci] = max(0.0, cand[ci] + sign * h)
                        total = cand.sum()
                        if total <= 0:
                            continue
                        cand /= total
                        trial = list(cur)
                        trial[bi] = cand
                        r1, r2 = eval_corner(trial)
                        score = w[0] * r1 + w[1] * r2
                        if score > best + 1e-15:
                            best = score
                            cur = trial
                            visited.append(((r1, r2), [b.copy() for b in cur]))
                            improved = True
            if not improved:
                h /= 2.0
                if h < 1e-6:
                    break
    return visited


def _refine_product(ch, corners, descriptors, resolution, corner_fn):
    tensor = ch.transition
    arr = np.array(corners)

    def eval_corner(blocks):
        px = blocks[0][:, None] * blocks[1][None, :]
        r1, r2 = corner_fn(_pair_terms(tensor, px[None]))
        return float(r1[0]), float(r2[0])

    extra = []
    extra_desc = []
    starts = {int(np.argmax(arr @ np.array(w))) for w in _OBJECTIVES}
    for k in starts:
        d = descriptors[k]
        blocks = (np.array(d["p_x1"]), np.array(d["p_x2"]))
        for (r1, r2), state in _descend(blocks, eval_corner, 1.0 / (resolution - 1)):
            extra.append((r1, r2))
            extra_desc.append({
                "p_x1": [float(v) for v in state[0]],
                "p_x2": [float(v) for v in state[1]],
                "refined": True,
            })
    all_corners = corners + extra
    all_desc = _ListDescriptors(
        [descriptors[k] for k in range(len(corners))] + extra_desc)
    return all_corners, all_desc


def _refine_correlated(ch, region, resolution):
    tensor = ch.transition
    shape = (ch.size_x1, ch.size_x2)

    def eval_corner(blocks):
        px = blocks[0].reshape(shape)
        r1, r2 = _outer_corner_arrays(_pair_terms(tensor, px[None]))
        return float(r1[0]), float(r2[0])

    extra = []
    extra_desc = []
    for vertex, desc in zip(region.frontier, region.generators or []):
        px = np.array(desc["p_x1x2"], dtype=float).ravel()
        for (r1, r2), state in _descend((px,), eval_corner, 1.0 / (resolution - 1)):
            extra.append((r1, r2))
            extra_desc.append({
                "p_x1x2": [[float(v) for v in row]
                           for row in state[0].reshape(shape)],
                "refined": True,
            })
    return extra, extra_desc


# --------------------------------------------------------------------------
# Closed forms for the example channels
# --------------------------------------------------------------------------

def closed_form_binary(kind, p1, p2):
    """Rectangle corner of the binary example channels in closed form.

    ``bmc``: both caps p2*h(p1) + p1*h(p2) - h(p1*p2) (product noise free);
    ``xor``: both caps h(p1) + h(p2) - h(p1 conv p2);
    ``adder``: asymmetric caps weighted by the middle-symbol probability,
    zero whenever that probability vanishes.
    """
    for v in (p1, p2):
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"probabilities must be in [0,1], got {v!r}")
    kind = kind.lower()
    if kind == "bmc":
        cap = p2 * binary_entropy(p1) + p1 * binary_entropy(p2) - binary_entropy(p1 * p2)
        return RatePoint(cap, cap)
    if kind == "xor":
        cap = (binary_entropy(p1) + binary_entropy(p2)
               - binary_entropy(binary_convolve(p1, p2)))
        return RatePoint(cap, cap)
    if kind == "adder":
        mid = binary_convolve(p1, p2)
        if mid == 0.0:
            return RatePoint(0.0, 0.0)
        r1 = mid * binary_entropy(min(1.0, p1 * (1.0 - p2) / mid))
        r2 = mid * binary_entropy(min(1.0, p2 * (1.0 - p1) / mid))
        return RatePoint(r1, r2)
    raise ValueError(f'kind must be "bmc", "xor" or "adder", got {kind!r}')


class Mod2Regions:
    """The three closed-form regions of the binary modulo-2 channel."""

    __slots__ = ("reliability", "joint", "individual")

    def __init__(self, reliability, joint, individual):
        self.reliability = reliability
        self.joint = joint
        self.individual = individual


def mod2_regions(params):
    """Closed-form regions of the modulo-2 channel with additive noise.

    Reliability and individual secrecy share the same rectangle
    (1-h(eps2), 1-h(eps1)); joint secrecy keeps that rectangle but clips
    it by the sum cap 1 + h(epsz) - h(eps1) - h(eps2).  All caps clamp
    at zero.
    """
    cap1 = max(0.0, 1.0 - binary_entropy(params.eps2))
    cap2 = max(0.0, 1.0 - binary_entropy(params.eps1))
    sum_cap = max(0.0, 1.0 + binary_entropy(params.epsz)
                  - binary_entropy(params.eps1) - binary_entropy(params.eps2))
    rect = [(cap1, cap2)]
    reliability = convex_closure(rect, kind=RegionKind.RELIABILITY)
    individual = convex_closure(rect, kind=RegionKind.INNER_INDIVIDUAL)
    joint = convex_closure(_pentagon_vertices(cap1, cap2, sum_cap),
                           kind=RegionKind.INNER_JOINT)
    return Mod2Regions(reliability=reliability, joint=joint, individual=individual)


# --------------------------------------------------------------------------
# Degraded Gaussian channel: closed forms
# --------------------------------------------------------------------------

def _require_degraded(g):
    if not isinstance(g, GaussianTWC):
        raise TypeError("expected a GaussianTWC")
    if not g.is_degraded:
        raise PreconditionError(
            f"capacity formulas need Ne > N1 and Ne > N2, got "
            f"N1={g.n1}, N2={g.n2}, Ne={g.ne}"
        )


def gaussian_capacity_individual(g):
    """Individual-secrecy capacity rectangle of the degraded Gaussian channel."""
    _require_degraded(g)
    s = g.p1 + g.p2 + g.ne
    r1 = 0.5 * math.log2((g.p1 + g.n2) * (g.p2 + g.ne) / (g.n2 * s))
    r2 = 0.5 * math.log2((g.p2 + g.n1) * (g.p1 + g.ne) / (g.n1 * s))
    corner = RatePoint(r1, r2)
    return RateRegion([corner], kind=RegionKind.CAPACITY,
                      generators=[{"alpha": 0.0, "beta": 0.0}])


def gaussian_inner_rect(g, split):
    """Achievable rectangle of the power-split jamming scheme.

    ``alpha`` and ``beta`` are the jamming fractions; (0, 0) spends all
    power on signal and attains the capacity corner.
    """
    _require_degraded(g)
    s = g.p1 + g.p2 + g.ne
    a, b = split.alpha, split.beta
    r1 = 0.5 * math.log2((g.p1 + g.n2) * (a * g.p1 + g.p2 + g.ne)
                         / ((a * g.p1 + g.n2) * s))
    r2 = 0.5 * math.log2((g.p2 + g.n1) * (g.p1 + b * g.p2 + g.ne)
                         / ((b * g.p2 + g.n1) * s))
    return RatePoint(r1, r2)


def gaussian_outer_rect(g, split):
    """Converse rectangle of the power-split family; (1, 1) attains capacity."""
    _require_degraded(g)
    s = g.p1 + g.p2 + g.ne
    a, b = split.alpha, split.beta
    r1 = 0.5 * math.log2((a * g.p1 + g.n2) * (b * g.p2 + g.ne) / (g.n2 * s))
    r2 = 0.5 * math.log2((b * g.p2 + g.n1) * (a * g.p1 + g.ne) / (g.n1 * s))
    return RatePoint(r1, r2)


def gaussian_joint_sumrate(g):
    """Maximum sum rate under joint secrecy, in bits per channel use."""
    if not isinstance(g, GaussianTWC):
        raise TypeError("expected a GaussianTWC")
    s = g.p1 + g.p2 + g.ne
    return 0.5 * math.log2((g.p1 + g.n2) * (g.p2 + g.n1) * g.ne / (g.n2 * g.n1 * s))


def gaussian_sumrate_gap(g):
    """Joint-secrecy max sum rate minus individual-secrecy sum rate.

    Strictly negative for positive powers: jamming-free individual secrecy
    carries more total traffic than the coupled joint constraint allows.
    """
    if not isinstance(g, GaussianTWC):
        raise TypeError("expected a GaussianTWC")
    s = g.p1 + g.p2 + g.ne
    return 0.5 * math.log2(g.ne * s / ((g.p1 + g.ne) * (g.p2 + g.ne)))


def gaussian_inner_region(g, resolution=33):
    """Convex closure of the power-split achievable rectangles."""
    _require_degraded(g)
    grid = np.linspace(0.0, 1.0, resolution)
    corners = []
    descriptors = []
    for a in grid:
        for b in grid:
            p = gaussian_inner_rect(g, PowerSplit(a, b))
            corners.append(p)
            descriptors.append({"alpha": float(a), "beta": float(b)})
    return convex_closure(corners, kind=RegionKind.INNER_INDIVIDUAL,
                          generators=descriptors)


def gaussian_outer_region(g, resolution=33):
    """Convex closure of the power-split converse rectangles."""
    _require_degraded(g)
    grid = np.linspace(0.0, 1.0, resolution)
    corners = []
    descriptors = []
    for a in grid:
        for b in grid:
            p = gaussian_outer_rect(g, PowerSplit(a, b))
            corners.append(p)
            descriptors.append({"alpha": float(a), "beta": float(b)})
    return convex_closure(corners, kind=RegionKind.OUTER_INDIVIDUAL,
                          generators=descriptors)


def gaussian_joint_region(g):
    """Joint-secrecy region summarized by its sum-rate frontier."""
    s = gaussian_joint_sumrate(g)
    if s <= 0:
        return RateRegion([RatePoint(0.0, 0.0)], kind=RegionKind.INNER_JOINT)
    return RateRegion([RatePoint(0.0, s), RatePoint(s, 0.0)],
                      kind=RegionKind.INNER_JOINT)


# --------------------------------------------------------------------------
# Export and comparison
# --------------------------------------------------------------------------

def _kind_labels(kind):
    if kind is None:
        return ("custom", "custom")
    return _KIND_LABELS[kind]


def region_to_csv(region, path):
    """Write the frontier as ``kind,bound,r1s,r2s`` rows, 12 significant digits."""
    kind, bound = _kind_labels(region.kind)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["kind", "bound", "r1s", "r2s"])
        for v in region.frontier:
            writer.writerow([kind, bound, f"{v.r1s:.12g}", f"{v.r2s:.12g}"])


def region_to_json(region, path, include_generators=True):
    """Write the region, summary statistics and optional provenance as JSON."""
    kind, bound = _kind_labels(region.kind)
    doc = {
        "kind": kind,
        "bound": bound,
        "frontier": [{"r1s": v.r1s, "r2s": v.r2s} for v in region.frontier],
        "max_r1s": region.max_r1s,
        "max_r2s": region.max_r2s,
        "max_sum": region.max_sum,
        "area": region.area(),
    }
    if include_generators and region.generators is not None:
        doc["generators"] = list(region.generators)
    with open(path, "w") as f:
        json.dump(doc, f, indent=1, sort_keys=True)
        f.write("\n")


@dataclass(frozen=True)
class RegionComparison:
    """Pairwise comparison of two regions on the same channel."""

    exceedance_ab: float   # how far region A pokes outside region B
    exceedance_ba: float
    hausdorff: float
    area_a: float
    area_b: float
    area_ratio: float
    max_sum_a: float
    max_sum_b: float
    max_sum_diff: float

    def contains(self, tol=1e-9):
        """(A subset of B, B subset of A) verdicts at the given tolerance."""
        return (self.exceedance_ab <= tol, self.exceedance_ba <= tol)


def compare_regions(region_a, region_b):
    """Containment exceedances, Hausdorff distance, areas and sum rates."""
    area_a = region_a.area()
    area_b = region_b.area()
    return RegionComparison(
        exceedance_ab=frontier_exceedance(region_a, region_b),
        exceedance_ba=frontier_exceedance(region_b, region_a),
        hausdorff=hausdorff_distance(region_a, region_b),
        area_a=area_a,
        area_b=area_b,
        area_ratio=area_a / area_b if area_b > 0 else float("inf"),
        max_sum_a=region_a.max_sum,
        max_sum_b=region_b.max_sum,
        max_sum_diff=region_a.max_sum - region_b.max_sum,
    )
