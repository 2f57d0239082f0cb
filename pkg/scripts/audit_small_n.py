#!/usr/bin/env python3
"""Run the one-set-extension audit over every family of a small ground set.

Exhaustive for n <= 4; pass --count/--seed to sample larger ground sets
instead.  Exits nonzero if any extremal family fails to extend.
"""

import argparse
import sys
import time

from shatterlab import audit_conjecture


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[2, 3, 4],
                        help="ground set sizes to audit (default: 2 3 4)")
    parser.add_argument("--count", type=int, default=None,
                        help="sample this many random families instead of enumerating")
    parser.add_argument("--seed", type=int, default=2024,
                        help="splitmix64 seed for random mode")
    args = parser.parse_args()

    failures = 0
    for n in args.n:
        start = time.monotonic()
        report = audit_conjecture(n, samples=args.count,
                                  seed=args.seed if args.count else None)
        elapsed = time.monotonic() - start
        print(f"n={n} mode={report.mode} examined={report.families_examined} "
              f"extremal={report.extremal_families} "
              f"brute_failures={report.brute_failures} "
              f"missing_witness={report.missing_witness} "
              f"machinery_failures={report.machinery_failures} "
              f"disagreements={report.disagreements} ok={report.ok}")
        print(f"  ({elapsed:.2f}s)", file=sys.stderr)
        if not report.ok:
            failures += 1
            for masks in report.counterexamples:
                print(f"  counterexample family masks: {masks}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
