#!/usr/bin/env python3
"""When is the eavesdropper's view a degraded copy of a user's?

Stochastic degradedness asks for a kernel k(z|y) that reproduces the
eavesdropper's conditional law by post-processing one user's output.  The
check solves a small linear program, so a feasible verdict comes with an
explicit witness kernel and an infeasible one with a quantitative residual.

Degradedness matters twice: it is the class assumption behind one outer
bound, and on such channels joint secrecy starves one user while
individual secrecy keeps both alive.
"""

from twsec import Mod2Params, build_library_channel, check_stochastic_degradedness


def show(label, ch):
    print(f"\n{label}")
    for out in ("y1", "y2"):
        verdict = check_stochastic_degradedness(ch, out)
        state = "feasible" if verdict.feasible else "infeasible"
        print(f"  z from {out}: {state:10}  residual {verdict.residual:.3g}")
        if verdict.witness is not None:
            for row in verdict.witness.table:
                print("      " + "  ".join(f"{v:.4f}" for v in row))


def main():
    show("xor channel: z IS y1, witness is the identity",
         build_library_channel("xor"))

    show("mod2 (0.1, 0.1, 0.3): z needs an extra flip of 0.25 beyond y1",
         build_library_channel("mod2", Mod2Params(0.1, 0.1, 0.3)))

    show("mod2 (0.3, 0.3, 0.1): the eavesdropper is cleaner, no kernel exists",
         build_library_channel("mod2", Mod2Params(0.3, 0.3, 0.1)))

    show("mod2 (0.4, 0.1, 0.3): degraded via user 2 only",
         build_library_channel("mod2", Mod2Params(0.4, 0.1, 0.3)))

    print("\nA positive residual certifies infeasibility: no post-processing "
          "of that user's output can mimic the eavesdropper's channel.")


if __name__ == "__main__":
    main()
