#!/usr/bin/env python3
"""Reproduce the (3,5;n) class-count tables with both pipelines.

Prints one row per n: the class count, total wall time, and the share of
time spent in canonization.  The generate-test-reduce pipeline runs to
n = 14 (where the count reaches 0); the constrain-generate pipeline is
capped by --cg-max-n because each size is an independent SAT enumeration.
"""

import argparse

from gcanon.ramsey import RamseyInstance, gen_ramsey_cg_trace, \
    gen_ramsey_gt_trace


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--s", type=int, default=3)
    ap.add_argument("--t", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--cg-max-n", type=int, default=11)
    args = ap.parse_args()

    print(f"generate-test-reduce ({args.s},{args.t};n)")
    print("n\tclasses\ttotal_s\tcanon_s")
    for step in gen_ramsey_gt_trace(RamseyInstance(args.s, args.t,
                                                   args.max_n)):
        print(f"{step.n}\t{len(step.graphs)}\t{step.total_seconds:.2f}"
              f"\t{step.canon_seconds:.2f}")

    print(f"\nconstrain-generate ({args.s},{args.t};n)")
    print("n\tclasses\ttotal_s\tcanon_s")
    for n in range(1, args.cg_max_n + 1):
        step = gen_ramsey_cg_trace(RamseyInstance(args.s, args.t, n))
        print(f"{step.n}\t{len(step.graphs)}\t{step.total_seconds:.2f}"
              f"\t{step.canon_seconds:.2f}")


if __name__ == "__main__":
    main()
