"""Command-line driver: regions, comparisons, code simulation, degradedness.

Machine-readable data goes to files (CSV/JSON); stdout carries short
summaries only, so external plotting stays scriptable.  Exit codes: 0
success, 2 bad flags or channel spec, 3 precondition failure (wrong
channel class, non-degraded Gaussian), 4 enumeration budget exceeded
without a Monte-Carlo fallback.  check-degraded exits 1 when either
direction is infeasible.
"""

import argparse
import dataclasses
import json
import os
import sys

from . import codes, regions
from .channels import (
    DiscreteTWC,
    GaussianTWC,
    Mod2Params,
    build_library_channel,
    check_stochastic_degradedness,
    is_same_output,
    load_channel,
)
from .exceptions import (
    BudgetExceededError,
    ChannelSpecError,
    PreconditionError,
    ValidationError,
)
from .infocalc import Pmf
from .regions import PrefixedInputs, RegionKind

_EXIT_OK = 0
_EXIT_FAIL = 1
_EXIT_SPEC = 2
_EXIT_PRECONDITION = 3
_EXIT_BUDGET = 4

_FIG6_DEFAULTS = {"p1": 300.0, "p2": 300.0, "n1": 2.0, "n2": 2.0, "ne": 3.0}


class UsageError(ValueError):
    """Inconsistent or incomplete flags."""


def _add_channel_flags(parser):
    parser.add_argument("--library", choices=["xor", "bmc", "adder", "mod2", "gaussian"],
                        help="built-in channel by name")
    parser.add_argument("--channel", metavar="FILE",
                        help="channel spec file (overrides --library)")
    parser.add_argument("--eps1", type=float, help="mod2: user-1 noise crossover")
    parser.add_argument("--eps2", type=float, help="mod2: user-2 noise crossover")
    parser.add_argument("--epsz", type=float, help="mod2: eavesdropper noise crossover")
    parser.add_argument("--p1", type=float, help="gaussian: user-1 power")
    parser.add_argument("--p2", type=float, help="gaussian: user-2 power")
    parser.add_argument("--n1", type=float, help="gaussian: user-1 noise variance")
    parser.add_argument("--n2", type=float, help="gaussian: user-2 noise variance")
    parser.add_argument("--ne", type=float, help="gaussian: eavesdropper noise variance")


def _add_region_flags(parser, suffix=""):
    parser.add_argument(f"--secrecy{suffix}", choices=["individual", "joint"],
                        default="individual")
    parser.add_argument(f"--bound{suffix}",
                        choices=["inner", "outer", "capacity", "reliability"],
                        default="inner")


def _build_channel(args):
    if args.channel:
        return load_channel(args.channel)
    if not args.library:
        raise UsageError("choose a channel with --library or --channel")
    if args.library == "gaussian":
        params = {}
        for key, default in _FIG6_DEFAULTS.items():
            v = getattr(args, key)
            params[key] = default if v is None else v
        return GaussianTWC(**params)
    if args.library == "mod2":
        if args.eps1 is None or args.eps2 is None or args.epsz is None:
            raise UsageError("--library mod2 needs --eps1, --eps2 and --epsz")
        return build_library_channel("mod2", Mod2Params(args.eps1, args.eps2, args.epsz))
    return build_library_channel(args.library)


def _mod2_params(args):
    if args.eps1 is None or args.eps2 is None or args.epsz is None:
        return None
    return Mod2Params(args.eps1, args.eps2, args.epsz)


def _resolve_class(ch, requested):
    if requested == "same-output":
        return "same_output"
    if requested == "degraded":
        return "eavesdropper_degraded"
    # auto: prefer the structural class, else the degraded class
    if is_same_output(ch):
        return "same_output"
    for out in ("y1", "y2"):
        if not check_stochastic_degradedness(ch, out).feasible:
            raise PreconditionError(
                "channel fits neither supported outer-bound class: outputs are "
                f"not identical and z is not degraded with respect to {out}"
            )
    return "eavesdropper_degraded"


def _compute_region(ch, args, secrecy, bound):
    resolution = args.resolution
    threads = args.threads
    if isinstance(ch, GaussianTWC):
        if secrecy == "joint":
            if bound != "inner":
                raise UsageError("gaussian joint secrecy supports --bound inner only")
            return regions.gaussian_joint_region(ch)
        if bound == "capacity":
            return regions.gaussian_capacity_individual(ch)
        if bound == "inner":
            return regions.gaussian_inner_region(ch, resolution=min(resolution, 65))
        if bound == "outer":
            return regions.gaussian_outer_region(ch, resolution=min(resolution, 65))
        raise UsageError("gaussian channels support inner, outer or capacity bounds")

    mod2 = _mod2_params(args) if args.library == "mod2" and not args.channel else None
    if bound == "reliability":
        if mod2 is None:
            raise UsageError("--bound reliability is established for --library mod2 only")
        return regions.mod2_regions(mod2).reliability
    if secrecy == "joint":
        if bound != "inner":
            raise UsageError("joint secrecy supports --bound inner only")
        if mod2 is not None:
            return regions.mod2_regions(mod2).joint
        return regions.inner_region_joint_symmetric(ch, resolution=resolution,
                                                    threads=threads)
    if bound == "inner":
        if mod2 is not None and args.prefixes == "identity":
            return regions.mod2_regions(mod2).individual
        return regions.inner_region_individual(
            ch, resolution=resolution, prefix_mode=args.prefixes,
            refine=args.refine, threads=threads)
    if bound == "outer":
        cls = _resolve_class(ch, args.channel_class)
        return regions.outer_region_individual(
            ch, channel_class=cls, resolution=resolution,
            refine=args.refine, threads=threads)
    if bound == "capacity":
        if getattr(ch, "name", "") != "xor":
            raise UsageError(
                "--bound capacity is established for xor and gaussian channels only")
        inner = regions.inner_region_individual(ch, resolution=resolution,
                                                threads=threads)
        return regions.RateRegion(inner.frontier, kind=RegionKind.CAPACITY,
                                  generators=inner.generators)
    raise UsageError(f"unsupported combination: --secrecy {secrecy} --bound {bound}")


def _print_region_summary(region, label=""):
    tag = f"[{label}] " if label else ""
    print(f"{tag}frontier vertices: {len(region.frontier)}")
    print(f"{tag}max r1s = {region.max_r1s:.6f}")
    print(f"{tag}max r2s = {region.max_r2s:.6f}")
    print(f"{tag}max sum = {region.max_sum:.6f}")
    print(f"{tag}area    = {region.area():.6f}")


def cmd_region(args):
    ch = _build_channel(args)
    region = _compute_region(ch, args, args.secrecy, args.bound)
    _print_region_summary(region)
    if args.output:
        if args.format == "csv":
            regions.region_to_csv(region, args.output)
        else:
            regions.region_to_json(region, args.output)
        print(f"wrote {args.output}")
    return _EXIT_OK


def cmd_compare(args):
    ch = _build_channel(args)
    region_a = _compute_region(ch, args, args.secrecy, args.bound)
    region_b = _compute_region(ch, args, args.secrecy2, args.bound2)
    report = regions.compare_regions(region_a, region_b)
    a_in_b, b_in_a = report.contains(tol=args.tol)
    label_a = f"{args.secrecy}/{args.bound}"
    label_b = f"{args.secrecy2}/{args.bound2}"
    print(f"A = {label_a}, B = {label_b} (tolerance {args.tol:g})")
    print(f"A subset of B: {a_in_b} (exceedance {report.exceedance_ab:.3g})")
    print(f"B subset of A: {b_in_a} (exceedance {report.exceedance_ba:.3g})")
    print(f"hausdorff distance = {report.hausdorff:.6g}")
    print(f"area A = {report.area_a:.6f}, area B = {report.area_b:.6f}, "
          f"ratio = {report.area_ratio:.6f}")
    print(f"max sum A = {report.max_sum_a:.6f}, max sum B = {report.max_sum_b:.6f}, "
          f"difference = {report.max_sum_diff:.6f}")
    if args.output:
        doc = dataclasses.asdict(report)
        doc.update({"region_a": label_a, "region_b": label_b, "tol": args.tol,
                    "a_subset_of_b": a_in_b, "b_subset_of_a": b_in_a})
        with open(args.output, "w") as f:
            json.dump(doc, f, indent=1, sort_keys=True)
            f.write("\n")
        print(f"wrote {args.output}")
    return _EXIT_OK


def _derive_rand_rates(ch, prefixes, r1s, r2s, fixed_r1r, fixed_r2r):
    """Saturating randomization rates for given secret rates.

    The derivation couples the two totals, so iterate to a fixed point;
    a fixed choice passed by the user short-circuits its own coordinate.
    """
    r1r = fixed_r1r if fixed_r1r is not None else 0.0
    r2r = fixed_r2r if fixed_r2r is not None else 0.0
    for _ in range(200):
        d1r, d2r = codes.derive_randomization_rates(
            ch, prefixes, r1s + r1r, r2s + r2r)
        new_r1r = fixed_r1r if fixed_r1r is not None else d1r
        new_r2r = fixed_r2r if fixed_r2r is not None else d2r
        if abs(new_r1r - r1r) < 1e-12 and abs(new_r2r - r2r) < 1e-12:
            return new_r1r, new_r2r
        # damped update: the raw map can cycle with unit slope
        r1r = 0.5 * (r1r + new_r1r)
        r2r = 0.5 * (r2r + new_r2r)
    raise UsageError(
        "randomization rates do not stabilize for these secret rates; "
        "pass --r1r and --r2r explicitly"
    )


def cmd_simulate(args):
    ch = _build_channel(args)
    if not isinstance(ch, DiscreteTWC):
        raise UsageError("simulation needs a discrete channel")
    n = args.n
    p1 = Pmf([1.0 / ch.size_x1] * ch.size_x1)
    p2 = Pmf([1.0 / ch.size_x2] * ch.size_x2)
    prefixes = PrefixedInputs.identity(p1, p2)

    if args.r1r is None or args.r2r is None:
        r1r, r2r = _derive_rand_rates(ch, prefixes, args.r1s, args.r2s,
                                      args.r1r, args.r2r)
    else:
        r1r, r2r = args.r1r, args.r2r
    requested = {"r1s": args.r1s, "r1r": r1r, "r2s": args.r2s, "r2r": r2r}
    rates = codes.CodeRates.quantized(n, args.r1s, r1r, args.r2s, r2r)

    if args.codebooks > 1 and not args.trials:
        report, _ = codes.evaluate_codebook_average(
            ch, prefixes, rates, k=args.codebooks, base_seed=args.seed,
            decoder=args.decoder, typ_eps=args.typ_eps)
    else:
        system = codes.build_system(ch, prefixes, rates, seed=args.seed,
                                    decoder=args.decoder, typ_eps=args.typ_eps)
        if args.trials:
            report = codes.simulate_trials(system, args.trials, seed=args.seed)
        else:
            report = codes.exact_evaluation(system)
    report = dataclasses.replace(report, rates=requested)
    print(f"n = {report.n}  method = {report.method}")
    print(f"quantized rates: {report.quantized_rates}")
    print(f"leak1 = {report.leak1:.6g}  leak2 = {report.leak2:.6g}")
    print(f"pe1   = {report.pe1:.6g}  pe2   = {report.pe2:.6g}")
    if args.output:
        report.to_json(args.output)
        print(f"wrote {args.output}")
    return _EXIT_OK


def cmd_check_degraded(args):
    ch = _build_channel(args)
    if not isinstance(ch, DiscreteTWC):
        raise UsageError("degradedness checking needs a discrete channel")
    all_feasible = True
    for out in ("y1", "y2"):
        verdict = check_stochastic_degradedness(ch, out, tol=args.tol)
        status = "feasible" if verdict.feasible else "infeasible"
        print(f"z degraded w.r.t. {out}: {status} (residual {verdict.residual:.3g})")
        if verdict.witness is not None:
            for row in verdict.witness.table:
                print("   " + "  ".join(f"{v:.6f}" for v in row))
        all_feasible &= verdict.feasible
    return _EXIT_OK if all_feasible else _EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twsec",
        description="Secrecy rate regions and binning-code evaluation for "
                    "two-way wiretap channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_region = sub.add_parser("region", help="compute a rate region")
    _add_channel_flags(p_region)
    _add_region_flags(p_region)
    p_region.add_argument("--threads", type=int, default=os.cpu_count(),
                          help="worker threads for region sweeps")
    p_region.add_argument("--resolution", type=int, default=101)
    p_region.add_argument("--prefixes", choices=["identity", "full"], default="identity")
    p_region.add_argument("--channel-class", choices=["auto", "same-output", "degraded"],
                          default="auto", help="class assumption for outer bounds")
    p_region.add_argument("--refine", action="store_true",
                          help="polish grid optima by coordinate descent")
    p_region.add_argument("--output", metavar="FILE")
    p_region.add_argument("--format", choices=["csv", "json"], default="csv")
    p_region.add_argument("--seed", type=int, default=0)
    p_region.set_defaults(func=cmd_region)

    p_compare = sub.add_parser("compare", help="compare two regions on one channel")
    _add_channel_flags(p_compare)
    _add_region_flags(p_compare)
    _add_region_flags(p_compare, suffix="2")
    p_compare.add_argument("--threads", type=int, default=os.cpu_count(),
                           help="worker threads for region sweeps")
    p_compare.add_argument("--resolution", type=int, default=101)
    p_compare.add_argument("--prefixes", choices=["identity", "full"], default="identity")
    p_compare.add_argument("--channel-class", choices=["auto", "same-output", "degraded"],
                           default="auto")
    p_compare.add_argument("--refine", action="store_true")
    p_compare.add_argument("--tol", type=float, default=1e-6,
                           help="containment tolerance")
    p_compare.add_argument("--output", metavar="FILE")
    p_compare.add_argument("--seed", type=int, default=0)
    p_compare.set_defaults(func=cmd_compare)

    p_sim = sub.add_parser("simulate", help="evaluate a binning code")
    _add_channel_flags(p_sim)
    p_sim.add_argument("--n", type=int, required=True, help="blocklength")
    p_sim.add_argument("--r1s", type=float, required=True)
    p_sim.add_argument("--r2s", type=float, required=True)
    p_sim.add_argument("--r1r", type=float,
                       help="randomization rate (derived when omitted)")
    p_sim.add_argument("--r2r", type=float)
    p_sim.add_argument("--trials", type=int,
                       help="Monte-Carlo trials instead of exact enumeration")
    p_sim.add_argument("--decoder", choices=["ml", "typicality"], default="ml")
    p_sim.add_argument("--typ-eps", type=float, default=0.1)
    p_sim.add_argument("--codebooks", type=int, default=1,
                       help="average exact figures over this many seeded codebooks")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--output", metavar="FILE")
    p_sim.set_defaults(func=cmd_simulate)

    p_deg = sub.add_parser("check-degraded",
                           help="test stochastic degradedness of the eavesdropper")
    _add_channel_flags(p_deg)
    p_deg.add_argument("--tol", type=float, default=1e-7)
    p_deg.set_defaults(func=cmd_check_degraded)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_BUDGET
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_PRECONDITION
    except (UsageError, ChannelSpecError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_SPEC
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
