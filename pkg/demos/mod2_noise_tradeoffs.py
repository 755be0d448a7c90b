#!/usr/bin/env python3
"""The modulo-2 channel: how noise levels shape its three regions.

The binary modulo-2 channel with additive noise at both users and the
eavesdropper admits closed-form regions: the reliable-transmission
rectangle, the identical individual-secrecy rectangle (secrecy is free
here), and the joint-secrecy pentagon whose sum cap charges
1 + h(eps_z) - h(eps_1) - h(eps_2).

The geometry falls into four qualitative cases depending on how the
eavesdropper's noise entropy compares with the users'.  This script picks
one parameter triple per case and prints the resulting corner structure,
plus a sweep showing the sum cap shrinking as the eavesdropper gets a
cleaner view.
"""

from twsec import Mod2Params, mod2_regions
from twsec.infocalc import binary_entropy


CASES = [
    ("noisiest eavesdropper", Mod2Params(0.05, 0.10, 0.30)),
    ("between the two users", Mod2Params(0.25, 0.05, 0.10)),
    ("between, mirrored", Mod2Params(0.05, 0.25, 0.10)),
    ("cleanest eavesdropper", Mod2Params(0.20, 0.25, 0.02)),
]


def describe(label, params):
    out = mod2_regions(params)
    rect = out.individual.frontier[0]
    print(f"\n{label}: eps1={params.eps1}, eps2={params.eps2}, epsz={params.epsz}")
    print(f"  noise entropies: h1={binary_entropy(params.eps1):.4f} "
          f"h2={binary_entropy(params.eps2):.4f} hz={binary_entropy(params.epsz):.4f}")
    print(f"  reliability = individual rectangle: ({rect.r1s:.4f}, {rect.r2s:.4f})")
    print(f"  joint sum cap: {out.joint.max_sum:.4f}   "
          f"joint vertices: {[(round(v.r1s, 4), round(v.r2s, 4)) for v in out.joint.frontier]}")
    missing = out.individual.area() - out.joint.area()
    print(f"  corner area lost to the joint constraint: {missing:.4f}")


def main():
    for label, params in CASES:
        describe(label, params)

    print("\nsum cap against eavesdropper noise (eps1 = eps2 = 0.1):")
    for epsz in (0.0, 0.05, 0.1, 0.2, 0.3, 0.5):
        cap = mod2_regions(Mod2Params(0.1, 0.1, epsz)).joint.max_sum
        print(f"  epsz = {epsz:4.2f}  ->  sum cap {cap:.4f}")


if __name__ == "__main__":
    main()
