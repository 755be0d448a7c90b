#!/usr/bin/env python3
"""Secrecy rate regions of the three binary example channels.

Walks the multiplying (AND), XOR and adder channels, computing for each:

  * the achievable individual-secrecy region (product-input sweep),
  * the outer bound on the individual secrecy capacity,
  * the achievable joint-secrecy region for comparison.

The XOR channel is the showpiece: its inner and outer individual regions
coincide at the (1, 1) corner, so individual secrecy costs nothing there,
while joint secrecy gives up half the region.  For the multiplying channel
a sizable gap between the bounds remains.

Writes one CSV per region into demo_output/ and prints a summary table.
Pass --plot to also render a PNG per channel (requires matplotlib).
"""

import argparse
import os

from twsec import (
    build_library_channel,
    inner_region_individual,
    inner_region_joint_symmetric,
    outer_region_individual,
    region_to_csv,
)


def region_outline(region):
    return [(0.0, region.max_r2s)] + \
        [(v.r1s, v.r2s) for v in region.frontier] + [(region.max_r1s, 0.0)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--resolution", type=int, default=101)
    parser.add_argument("--outdir", default="demo_output")
    parser.add_argument("--plot", action="store_true")
    args = parser.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    print(f"{'channel':8} {'bound':18} {'max r1s':>9} {'max sum':>9} {'area':>9}")
    for kind in ("bmc", "xor", "adder"):
        ch = build_library_channel(kind)
        computed = {
            "inner_individual": inner_region_individual(
                ch, resolution=args.resolution),
            "outer_individual": outer_region_individual(
                ch, channel_class="same_output", resolution=args.resolution),
            "inner_joint": inner_region_joint_symmetric(
                ch, resolution=args.resolution),
        }
        for label, region in computed.items():
            path = os.path.join(args.outdir, f"{kind}_{label}.csv")
            region_to_csv(region, path)
            print(f"{kind:8} {label:18} {region.max_r1s:9.4f} "
                  f"{region.max_sum:9.4f} {region.area():9.4f}")
        ratio = computed["inner_joint"].area() / computed["inner_individual"].area()
        print(f"{kind:8} joint/individual area ratio = {ratio:.4f}")

        if args.plot:
            import matplotlib
            matplotlib.use("Agg")
            import matplotlib.pyplot as plt

            fig, ax = plt.subplots(figsize=(5, 5))
            styles = {"inner_individual": "-", "outer_individual": "--",
                      "inner_joint": "-."}
            for label, region in computed.items():
                xs, ys = zip(*region_outline(region))
                ax.plot(xs, ys, styles[label], label=label)
            ax.set_xlabel("user 1 secrecy rate (bits/use)")
            ax.set_ylabel("user 2 secrecy rate (bits/use)")
            ax.set_title(f"{kind} channel")
            ax.legend()
            fig.tight_layout()
            out = os.path.join(args.outdir, f"{kind}_regions.png")
            fig.savefig(out, dpi=150)
            plt.close(fig)
            print(f"{kind:8} plot -> {out}")
    print(f"\nregion CSVs in {args.outdir}/")


if __name__ == "__main__":
    main()
