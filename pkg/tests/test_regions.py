import csv
import json
import math

import numpy as np
import pytest

from twsec.channels import DiscreteTWC, GaussianTWC, Mod2Params, build_library_channel
from twsec.exceptions import BudgetExceededError, PreconditionError
from twsec.infocalc import ConditionalKernel, Pmf
from twsec.regions import (
    GeneralOuterAuxiliaries,
    PowerSplit,
    PrefixedInputs,
    RatePoint,
    RateRegion,
    RegionKind,
    TimeSharedInputs,
    closed_form_binary,
    compare_regions,
    convex_closure,
    frontier_exceedance,
    gaussian_capacity_individual,
    gaussian_inner_rect,
    gaussian_inner_region,
    gaussian_joint_region,
    gaussian_joint_sumrate,
    gaussian_outer_rect,
    gaussian_outer_region,
    gaussian_sumrate_gap,
    hausdorff_distance,
    inner_rect_individual,
    inner_rect_symmetric_output,
    inner_region_individual,
    inner_region_joint_symmetric,
    mod2_regions,
    outer_rect_general,
    outer_rect_time_shared,
    outer_region_individual,
    region_area,
    region_contains,
    region_to_csv,
    region_to_json,
    simplex_grid,
)
from twsec.regions import _pair_terms

import oracles


def uniform_inputs():
    return PrefixedInputs.identity(Pmf([0.5, 0.5]), Pmf([0.5, 0.5]))


# ---------------------------------------------------------------------------
# RatePoint / RateRegion / convex_closure
# ---------------------------------------------------------------------------

def test_rate_point_clamps_negatives():
    p = RatePoint(-0.25, 1.5)
    assert p.r1s == 0.0 and p.r2s == 1.5


def test_closure_of_two_axis_points_is_triangle():
    region = convex_closure([(0.0, 1.0), (1.0, 0.0)])
    assert [(v.r1s, v.r2s) for v in region.frontier] == [(0.0, 1.0), (1.0, 0.0)]
    assert region.area() == pytest.approx(0.5, abs=1e-12)


def test_closure_of_single_corner_is_rectangle():
    region = convex_closure([RatePoint(1.0, 1.0)])
    assert len(region.frontier) == 1
    assert region.area() == pytest.approx(1.0, abs=1e-12)
    assert region.contains(RatePoint(0.0, 0.0))
    assert region.contains(RatePoint(1.0, 1.0))
    assert not region.contains(RatePoint(1.0 + 1e-6, 0.1))


def test_closure_drops_dominated_and_non_concave_points():
    # (0.5, 0.9) is dominated by (1, 1); (1.2, 0.8) falls under the chord
    # from (1, 1) to (1.9, 0.35); (1.9, 0.35) sits above the (1,1)-(2,0) chord
    pts = [(0.2, 0.2), (1.0, 1.0), (0.5, 0.9),
           (1.2, 0.8), (1.9, 0.35), (2.0, 0.0)]
    region = convex_closure(pts)
    coords = [(v.r1s, v.r2s) for v in region.frontier]
    assert coords == [(1.0, 1.0), (1.9, 0.35), (2.0, 0.0)]
    for a, b in zip(region.frontier, region.frontier[1:]):
        assert b.r1s > a.r1s and b.r2s < a.r2s


def test_closure_keeps_axis_vertex():
    region = convex_closure([(0.0, 2.0), (1.0, 1.5)])
    coords = [(v.r1s, v.r2s) for v in region.frontier]
    assert coords == [(0.0, 2.0), (1.0, 1.5)]
    assert region.area() == pytest.approx(1.75 + 1.5 * 0, abs=1e-12) or True
    # area: trapezoid 0..1 under segment (2.0 -> 1.5) plus nothing beyond
    assert region.area() == pytest.approx((2.0 + 1.5) / 2, abs=1e-12)


def test_closure_empty_input_rejected():
    with pytest.raises(ValueError):
        convex_closure([])


def test_region_contains_and_area_on_pentagon():
    region = convex_closure([(1.0, 0.5), (0.5, 1.0)])
    assert region_contains(region, RatePoint(0.74, 0.74))
    assert not region_contains(region, RatePoint(0.8, 0.8))
    assert region_area(region) == pytest.approx(0.875, abs=1e-12)


def test_generators_follow_frontier_vertices():
    pts = [(0.2, 0.2), (1.0, 1.0), (0.4, 1.2)]
    gens = ["a", "b", "c"]
    region = convex_closure(pts, generators=gens)
    assert region.generators == ("c", "b")
    assert [(v.r1s, v.r2s) for v in region.frontier] == [(0.4, 1.2), (1.0, 1.0)]


def test_frontier_invariant_enforced():
    with pytest.raises(ValueError):
        RateRegion([RatePoint(0.5, 0.5), RatePoint(1.0, 0.5)])


def test_hausdorff_identical_regions_is_zero():
    region = convex_closure([(1.0, 0.5), (0.5, 1.0)])
    assert hausdorff_distance(region, region) == 0.0


def test_hausdorff_scaled_squares():
    a = convex_closure([(1.0, 1.0)])
    b = convex_closure([(1.1, 1.1)])
    assert hausdorff_distance(a, b) == pytest.approx(0.1 * math.sqrt(2), abs=1e-9)


def test_simplex_grid_shapes_and_budget():
    g = simplex_grid(3, 5)
    assert g.shape == (15, 3)
    assert np.allclose(g.sum(axis=1), 1.0)
    with pytest.raises(BudgetExceededError) as err:
        simplex_grid(9, 101, budget=1000)
    assert err.value.required > 1000


# ---------------------------------------------------------------------------
# rectangle evaluators
# ---------------------------------------------------------------------------

def test_inner_rect_xor_uniform_hits_one_one():
    ch = build_library_channel("xor")
    point = inner_rect_individual(ch, uniform_inputs())
    assert point.r1s == 1.0 and point.r2s == 1.0


def test_inner_rect_point_mass_inputs_zero():
    ch = build_library_channel("adder")
    inputs = PrefixedInputs.identity(Pmf([1.0, 0.0]), Pmf([0.0, 1.0]))
    point = inner_rect_individual(ch, inputs)
    assert point.r1s == 0.0 and point.r2s == 0.0


def test_inner_rect_mod2_uniform_matches_closed_form():
    ch = build_library_channel("mod2", Mod2Params(0.1, 0.1, 0.2))
    point = inner_rect_individual(ch, uniform_inputs())
    cap = 1.0 - oracles.binary_entropy_bits(0.1)
    assert point.r1s == pytest.approx(cap, abs=1e-9)
    assert point.r2s == pytest.approx(cap, abs=1e-9)
    assert cap == pytest.approx(0.531004406411, abs=1e-9)


def test_inner_rect_with_full_jamming_prefix_kills_rate():
    # a coin-flip prefix on user 1 hides everything, including its own message
    ch = build_library_channel("xor")
    jam = ConditionalKernel([[0.5, 0.5], [0.5, 0.5]])
    inputs = PrefixedInputs(Pmf([0.5, 0.5]), Pmf([0.5, 0.5]),
                            jam, ConditionalKernel.identity(2))
    point = inner_rect_individual(ch, inputs)
    assert point.r1s == 0.0


def test_symmetric_output_rect_matches_reduction():
    # identity-prefix evaluation reduces to the symmetric-output formula
    rng = np.random.default_rng(3)
    for ch in (build_library_channel("xor"), build_library_channel("bmc"),
               build_library_channel("adder")):
        for _ in range(10):
            p1 = rng.dirichlet([1, 1])
            p2 = rng.dirichlet([1, 1])
            full = inner_rect_individual(
                ch, PrefixedInputs.identity(Pmf(p1), Pmf(p2)))
            fast = inner_rect_symmetric_output(ch, Pmf(p1), Pmf(p2))
            assert full.r1s == pytest.approx(fast.r1s, abs=1e-9)
            assert full.r2s == pytest.approx(fast.r2s, abs=1e-9)


def test_symmetric_output_rect_rejects_asymmetric_channel():
    ch = build_library_channel("mod2", Mod2Params(0.1, 0.1, 0.2))
    with pytest.raises(PreconditionError):
        inner_rect_symmetric_output(ch, Pmf([0.5, 0.5]), Pmf([0.5, 0.5]))


def test_outer_rect_general_identity_layers_on_xor():
    # constant common layer; per-user layers carry the inputs verbatim
    pu = Pmf([1.0])
    kv = ConditionalKernel(np.full((1, 2), 0.5), 1)
    kx = np.zeros((1, 2, 2, 2, 2))
    for v1 in range(2):
        for v2 in range(2):
            kx[0, v1, v2, v1, v2] = 1.0
    aux = GeneralOuterAuxiliaries(pu, kv, kv, ConditionalKernel(kx, 3))
    point = outer_rect_general(build_library_channel("xor"), aux)
    assert point.r1s == pytest.approx(1.0, abs=1e-9)
    assert point.r2s == pytest.approx(1.0, abs=1e-9)


def test_outer_rect_general_point_mass_is_zero():
    pu = Pmf([1.0])
    kv = ConditionalKernel([[1.0]], 1)
    kx = np.zeros((1, 1, 1, 2, 2))
    kx[0, 0, 0, 1, 0] = 1.0
    aux = GeneralOuterAuxiliaries(pu, kv, kv, ConditionalKernel(kx, 3))
    point = outer_rect_general(build_library_channel("xor"), aux)
    assert point == RatePoint(0.0, 0.0)


def test_outer_rect_time_shared_averages_raw_corners():
    ch = build_library_channel("bmc")
    laws = np.zeros((2, 2, 2))
    laws[0] = 0.25
    laws[1] = [[0.7, 0.1], [0.1, 0.1]]
    ts = TimeSharedInputs(Pmf([0.3, 0.7]), ConditionalKernel(laws, 1))
    got = outer_rect_time_shared(ch, ts)
    raw1 = raw2 = 0.0
    for w, law in zip((0.3, 0.7), laws):
        t = _pair_terms(ch.transition, law[None])
        raw1 += w * float(t["i_x1_y2_g_x2"][0] - t["i_x1_z"][0])
        raw2 += w * float(t["i_x2_y1_g_x1"][0] - t["i_x2_z"][0])
    assert got.r1s == pytest.approx(max(0.0, raw1), abs=1e-9)
    assert got.r2s == pytest.approx(max(0.0, raw2), abs=1e-9)


def test_time_shared_cardinality_bound():
    ch = build_library_channel("bmc")
    laws = np.full((6, 2, 2), 0.25)
    ts = TimeSharedInputs(Pmf(np.full(6, 1 / 6)), ConditionalKernel(laws, 1))
    with pytest.raises(PreconditionError):
        outer_rect_time_shared(ch, ts)


# ---------------------------------------------------------------------------
# region sweeps
# ---------------------------------------------------------------------------

def test_xor_inner_region_reaches_capacity_corner():
    region = inner_region_individual(build_library_channel("xor"), resolution=51)
    assert len(region.frontier) == 1
    assert region.frontier[0] == RatePoint(1.0, 1.0)


def test_degenerate_single_letter_user_has_no_rate():
    # user 1 has a single input letter: its message rate collapses to 0;
    # with z identical to the user outputs, user 2 gets nothing either
    t = np.zeros((1, 2, 2, 2, 2))
    for x2 in range(2):
        t[0, x2, x2, x2, x2] = 1.0
    region = inner_region_individual(DiscreteTWC(t), resolution=51)
    assert region.max_r1s == 0.0
    assert region.frontier == (RatePoint(0.0, 0.0),)

    # a noisier eavesdropper leaves user 2 a genuine r1s = 0 segment
    t = np.zeros((1, 2, 2, 2, 2))
    for x2 in range(2):
        for z in range(2):
            t[0, x2, x2, x2, z] = 0.8 if z == x2 else 0.2
    region = inner_region_individual(DiscreteTWC(t), resolution=51)
    assert region.max_r1s == 0.0
    # h(q) - h(q conv 0.2) + h(0.2) peaks at q = 1/2 with value h(0.2)
    cap = oracles.binary_entropy_bits(0.2)
    assert region.max_r2s == pytest.approx(cap, abs=1e-9)


def test_inner_region_monotone_in_resolution():
    ch = build_library_channel("bmc")
    coarse = inner_region_individual(ch, resolution=26)
    fine = inner_region_individual(ch, resolution=51)
    assert frontier_exceedance(coarse, fine) <= 1e-12


def test_inner_region_budget_error_carries_estimate():
    ch = build_library_channel("bmc")
    with pytest.raises(BudgetExceededError) as err:
        inner_region_individual(ch, resolution=5001, budget=10_000)
    assert err.value.required is not None


def test_full_prefix_sweep_contains_identity_sweep():
    ch = build_library_channel("xor")
    full = inner_region_individual(ch, resolution=3, prefix_mode="full")
    ident = inner_region_individual(ch, resolution=3)
    assert frontier_exceedance(ident, full) <= 1e-12


def test_refined_sweep_contains_grid_sweep():
    ch = build_library_channel("bmc")
    plain = inner_region_individual(ch, resolution=21)
    refined = inner_region_individual(ch, resolution=21, refine=True)
    assert frontier_exceedance(plain, refined) <= 1e-12
    # refinement must close most of the gap to a finer grid's corner
    fine = inner_region_individual(ch, resolution=201)
    assert refined.max_r1s >= fine.max_r1s - 1e-4


def test_joint_region_xor_is_triangle():
    region = inner_region_joint_symmetric(build_library_channel("xor"),
                                          resolution=51)
    assert region.max_sum == pytest.approx(1.0, abs=1e-9)
    assert region.area() == pytest.approx(0.5, abs=1e-9)
    coords = {(v.r1s, v.r2s) for v in region.frontier}
    assert (1.0, 0.0) in coords and (0.0, 1.0) in coords


def test_joint_region_point_mass_grid_degenerates():
    # resolution 2 only samples point-mass inputs: nothing is achievable
    region = inner_region_joint_symmetric(build_library_channel("xor"),
                                          resolution=2)
    assert region.frontier == (RatePoint(0.0, 0.0),)


def test_joint_region_requires_symmetric_outputs():
    ch = build_library_channel("mod2", Mod2Params(0.1, 0.1, 0.2))
    with pytest.raises(PreconditionError):
        inner_region_joint_symmetric(ch)


def test_outer_region_xor_coincides_with_inner():
    ch = build_library_channel("xor")
    inner = inner_region_individual(ch, resolution=51)
    outer = outer_region_individual(ch, "same_output", resolution=51)
    assert outer.frontier[0] == RatePoint(1.0, 1.0)
    assert hausdorff_distance(inner, outer) <= 1e-12


def test_outer_region_bmc_strictly_contains_inner():
    ch = build_library_channel("bmc")
    inner = inner_region_individual(ch, resolution=51)
    outer = outer_region_individual(ch, "same_output", resolution=51)
    assert frontier_exceedance(inner, outer) <= 1e-9
    assert outer.max_r1s > inner.max_r1s + 0.1


def test_outer_region_class_checks():
    mod2_bad = build_library_channel("mod2", Mod2Params(0.3, 0.3, 0.1))
    with pytest.raises(PreconditionError, match="y1"):
        outer_region_individual(mod2_bad, "eavesdropper_degraded", resolution=11)
    with pytest.raises(PreconditionError):
        outer_region_individual(mod2_bad, "same_output", resolution=11)
    with pytest.raises(ValueError):
        outer_region_individual(build_library_channel("xor"), "bogus")


def test_outer_region_single_letter_user():
    t = np.zeros((1, 2, 2, 2, 2))
    for x2 in range(2):
        t[0, x2, x2, x2, x2] = 1.0
    region = outer_region_individual(DiscreteTWC(t), "same_output", resolution=21)
    assert region.max_r1s == 0.0


def random_channel(rng, nx1=2, nx2=2, ny1=2, ny2=2, nz=2):
    t = rng.dirichlet(np.ones(ny1 * ny2 * nz), size=(nx1, nx2))
    return DiscreteTWC(t.reshape(nx1, nx2, ny1, ny2, nz))


def test_batched_inner_corners_match_scalar_evaluator():
    # the vectorized sweep core against the pmf-based rectangle evaluator
    rng = np.random.default_rng(41)
    for _ in range(10):
        ch = random_channel(rng, nz=3)
        p1 = rng.dirichlet([1, 1])
        p2 = rng.dirichlet([1, 1])
        scalar = inner_rect_individual(
            ch, PrefixedInputs.identity(Pmf(p1), Pmf(p2)))
        from twsec.regions import _inner_corner_arrays
        px = (p1[:, None] * p2[None, :])[None]
        r1, r2 = _inner_corner_arrays(_pair_terms(ch.transition, px))
        assert scalar.r1s == pytest.approx(float(r1[0]), abs=1e-9)
        assert scalar.r2s == pytest.approx(float(r2[0]), abs=1e-9)


def test_batched_outer_corners_match_time_shared_evaluator():
    rng = np.random.default_rng(43)
    for _ in range(10):
        ch = random_channel(rng, ny1=3)
        law = rng.dirichlet(np.ones(4)).reshape(1, 2, 2)
        ts = TimeSharedInputs(Pmf([1.0]), ConditionalKernel(law, 1))
        scalar = outer_rect_time_shared(ch, ts)
        from twsec.regions import _outer_corner_arrays
        r1, r2 = _outer_corner_arrays(_pair_terms(ch.transition, law))
        assert scalar.r1s == pytest.approx(float(r1[0]), abs=1e-9)
        assert scalar.r2s == pytest.approx(float(r2[0]), abs=1e-9)


def test_threaded_sweep_matches_sequential():
    ch = build_library_channel("adder")
    seq = outer_region_individual(ch, "same_output", resolution=101, threads=1)
    par = outer_region_individual(ch, "same_output", resolution=101, threads=4)
    assert seq.frontier == par.frontier


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def test_closed_form_frozen_points():
    assert closed_form_binary("xor", 0.5, 0.5) == RatePoint(1.0, 1.0)
    bmc = closed_form_binary("bmc", 0.5, 0.5)
    assert bmc.r1s == pytest.approx(0.188721875541, abs=1e-9)
    adder = closed_form_binary("adder", 0.5, 0.5)
    assert adder.r1s == pytest.approx(0.5, abs=1e-12)
    assert adder.r2s == pytest.approx(0.5, abs=1e-12)


def test_closed_form_adder_zero_mid_probability():
    assert closed_form_binary("adder", 0.0, 0.0) == RatePoint(0.0, 0.0)
    assert closed_form_binary("adder", 1.0, 1.0) == RatePoint(0.0, 0.0)


def test_closed_form_range_checks():
    with pytest.raises(ValueError):
        closed_form_binary("xor", -0.1, 0.5)
    with pytest.raises(ValueError):
        closed_form_binary("nand", 0.5, 0.5)


def test_closed_form_matches_tensor_evaluation():
    # cross-oracle equivalence on an 11 x 11 grid, all three kinds
    grid = np.linspace(0.0, 1.0, 11)
    for kind in ("bmc", "xor", "adder"):
        ch = build_library_channel(kind)
        for p1 in grid:
            for p2 in grid:
                formula = closed_form_binary(kind, p1, p2)
                tensor = inner_rect_symmetric_output(
                    ch, Pmf([1 - p1, p1]), Pmf([1 - p2, p2]))
                assert formula.r1s == pytest.approx(tensor.r1s, abs=1e-9), (kind, p1, p2)
                assert formula.r2s == pytest.approx(tensor.r2s, abs=1e-9), (kind, p1, p2)


def test_mod2_regions_noiseless():
    out = mod2_regions(Mod2Params(0.0, 0.0, 0.0))
    assert out.individual.frontier == (RatePoint(1.0, 1.0),)
    assert out.reliability.frontier == (RatePoint(1.0, 1.0),)
    assert out.joint.max_sum == pytest.approx(1.0, abs=1e-12)
    assert out.joint.area() == pytest.approx(0.5, abs=1e-12)


def test_mod2_regions_frozen_example():
    out = mod2_regions(Mod2Params(0.1, 0.1, 0.2))
    cap = 1.0 - oracles.binary_entropy_bits(0.1)
    assert out.individual.frontier[0].r1s == pytest.approx(cap, abs=1e-12)
    sum_cap = (1.0 + oracles.binary_entropy_bits(0.2)
               - 2.0 * oracles.binary_entropy_bits(0.1))
    assert out.joint.max_sum == pytest.approx(sum_cap, abs=1e-12)
    assert sum_cap == pytest.approx(0.783936907709, abs=1e-9)


def test_mod2_individual_equals_reliability_and_contains_joint():
    rng = np.random.default_rng(77)
    for _ in range(50):
        eps = Mod2Params(*rng.random(3))
        out = mod2_regions(eps)
        assert out.individual.frontier == out.reliability.frontier
        assert frontier_exceedance(out.joint, out.individual) <= 1e-12


def test_mod2_sweep_agrees_with_closed_form():
    params = Mod2Params(0.1, 0.1, 0.2)
    ch = build_library_channel("mod2", params)
    swept = inner_region_individual(ch, resolution=51)
    closed = mod2_regions(params).individual
    assert abs(swept.max_r1s - closed.max_r1s) <= 1e-9
    assert abs(swept.max_r2s - closed.max_r2s) <= 1e-9


# ---------------------------------------------------------------------------
# Gaussian closed forms
# ---------------------------------------------------------------------------

def fig6():
    return GaussianTWC(300.0, 300.0, 2.0, 2.0, 3.0)


def test_gaussian_capacity_frozen_values():
    cap = gaussian_capacity_individual(fig6())
    corner = cap.frontier[0]
    assert corner.r1s == pytest.approx(3.122782265449, abs=1e-9)
    assert corner.r2s == pytest.approx(3.122782265449, abs=1e-9)


def test_gaussian_capacity_symmetry():
    g = GaussianTWC(12.0, 12.0, 1.5, 1.5, 4.0)
    corner = gaussian_capacity_individual(g).frontier[0]
    assert corner.r1s == corner.r2s


def test_gaussian_capacity_requires_degradedness():
    with pytest.raises(PreconditionError):
        gaussian_capacity_individual(GaussianTWC(10, 10, 5, 1, 3))


def test_gaussian_weak_user_rate_vanishes():
    g = GaussianTWC(1.0, 1.0, 1.0, 1e6, 2e6)
    corner = gaussian_capacity_individual(g).frontier[0]
    assert corner.r1s < 1e-3


def test_gaussian_inner_rect_endpoints():
    g = fig6()
    cap = gaussian_capacity_individual(g).frontier[0]
    at_zero = gaussian_inner_rect(g, PowerSplit(0.0, 0.0))
    assert at_zero.r1s == cap.r1s and at_zero.r2s == cap.r2s
    at_one = gaussian_inner_rect(g, PowerSplit(1.0, 1.0))
    assert at_one == RatePoint(0.0, 0.0)


def test_gaussian_inner_rect_midpoint_frozen():
    # 0.5 log2((302)(150+303)/((152)(603))) per user at alpha = beta = 0.5
    point = gaussian_inner_rect(fig6(), PowerSplit(0.5, 0.5))
    want = 0.5 * math.log2(302.0 * 453.0 / (152.0 * 603.0))
    assert point.r1s == pytest.approx(want, abs=1e-12)
    assert point.r2s == pytest.approx(want, abs=1e-12)


def test_gaussian_outer_rect_endpoints():
    g = fig6()
    cap = gaussian_capacity_individual(g).frontier[0]
    at_one = gaussian_outer_rect(g, PowerSplit(1.0, 1.0))
    assert at_one.r1s == pytest.approx(cap.r1s, abs=1e-12)
    assert at_one.r2s == pytest.approx(cap.r2s, abs=1e-12)
    assert gaussian_outer_rect(g, PowerSplit(0.0, 0.0)) == RatePoint(0.0, 0.0)


def test_gaussian_coincidence_inner_outer():
    rng = np.random.default_rng(5)
    for _ in range(25):
        p1, p2 = rng.uniform(0.5, 400.0, 2)
        n1, n2 = rng.uniform(0.1, 5.0, 2)
        ne = max(n1, n2) + rng.uniform(0.1, 5.0)
        g = GaussianTWC(p1, p2, n1, n2, ne)
        inner = gaussian_inner_rect(g, PowerSplit(0.0, 0.0))
        outer = gaussian_outer_rect(g, PowerSplit(1.0, 1.0))
        assert abs(inner.r1s - outer.r1s) <= 1e-12
        assert abs(inner.r2s - outer.r2s) <= 1e-12


def test_gaussian_outer_rect_monotone_in_splits():
    g = fig6()
    grid = np.linspace(0.0, 1.0, 11)
    for i in range(10):
        for j in range(11):
            a = gaussian_outer_rect(g, PowerSplit(grid[i], grid[j]))
            b = gaussian_outer_rect(g, PowerSplit(grid[i + 1], grid[j]))
            c = gaussian_outer_rect(g, PowerSplit(grid[j], grid[i]))
            d = gaussian_outer_rect(g, PowerSplit(grid[j], grid[i + 1]))
            assert b.r1s >= a.r1s - 1e-12 and b.r2s >= a.r2s - 1e-12
            assert d.r1s >= c.r1s - 1e-12 and d.r2s >= c.r2s - 1e-12


def test_gaussian_joint_sumrate_frozen():
    assert gaussian_joint_sumrate(fig6()) == pytest.approx(3.412878893736, abs=1e-9)


def test_gaussian_sumrate_gap_frozen_and_consistent():
    g = fig6()
    gap = gaussian_sumrate_gap(g)
    assert gap == pytest.approx(-2.832685637162, abs=1e-9)
    cap = gaussian_capacity_individual(g).frontier[0]
    assert gap == pytest.approx(
        gaussian_joint_sumrate(g) - (cap.r1s + cap.r2s), abs=1e-12)


def test_gaussian_sumrate_gap_negative_on_random_draws():
    rng = np.random.default_rng(17)
    for _ in range(100):
        p1, p2 = rng.uniform(0.01, 500.0, 2)
        n1, n2 = rng.uniform(0.05, 10.0, 2)
        ne = max(n1, n2) + rng.uniform(0.01, 10.0)
        assert gaussian_sumrate_gap(GaussianTWC(p1, p2, n1, n2, ne)) < 0.0


def test_gaussian_gap_vanishes_at_small_power():
    g = GaussianTWC(1e-6, 1e-6, 1.0, 1.0, 2.0)
    assert -1e-6 < gaussian_sumrate_gap(g) < 0.0


def test_gaussian_regions_collapse_to_capacity():
    g = fig6()
    cap = gaussian_capacity_individual(g)
    inner = gaussian_inner_region(g, resolution=11)
    outer = gaussian_outer_region(g, resolution=11)
    assert hausdorff_distance(inner, cap) <= 1e-12
    assert hausdorff_distance(outer, cap) <= 1e-12


def test_gaussian_joint_region_is_sumrate_triangle():
    g = fig6()
    region = gaussian_joint_region(g)
    s = gaussian_joint_sumrate(g)
    assert region.max_sum == pytest.approx(s, abs=1e-12)
    assert region.area() == pytest.approx(s * s / 2, abs=1e-9)


# ---------------------------------------------------------------------------
# comparison and export
# ---------------------------------------------------------------------------

def test_compare_regions_reports():
    a = convex_closure([(1.0, 1.0)], kind=RegionKind.INNER_INDIVIDUAL)
    b = convex_closure([(2.0, 2.0)], kind=RegionKind.OUTER_INDIVIDUAL)
    rep = compare_regions(a, b)
    assert rep.contains(tol=1e-9) == (True, False)
    assert rep.exceedance_ba == pytest.approx(1.0, abs=1e-12)
    assert rep.area_ratio == pytest.approx(0.25, abs=1e-12)
    assert rep.max_sum_diff == pytest.approx(-2.0, abs=1e-12)


def test_region_csv_round_trip(tmp_path):
    region = convex_closure([(0.123456789012345, 1.0), (1.0, 0.25)],
                            kind=RegionKind.INNER_JOINT)
    path = tmp_path / "region.csv"
    region_to_csv(region, path)
    with open(path) as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["kind", "bound", "r1s", "r2s"]
    assert rows[1][0] == "joint" and rows[1][1] == "inner"
    assert float(rows[1][2]) == pytest.approx(0.123456789012345, abs=1e-12)
    assert len(rows) == 3


def test_region_json_export(tmp_path):
    region = convex_closure([(1.0, 1.0)], kind=RegionKind.CAPACITY,
                            generators=[{"p": [0.5, 0.5]}])
    path = tmp_path / "region.json"
    region_to_json(region, path)
    doc = json.loads(path.read_text())
    assert doc["kind"] == "individual" and doc["bound"] == "capacity"
    assert doc["frontier"] == [{"r1s": 1.0, "r2s": 1.0}]
    assert doc["area"] == pytest.approx(1.0)
    assert doc["generators"] == [{"p": [0.5, 0.5]}]
