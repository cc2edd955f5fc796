#!/usr/bin/env python3
"""Convergence of the branch triangles to their irrational limit.

For each step n this prints an exact upper bound on the squared Hausdorff
distance between the n-th branch triangle and the limit triangle (as a
decimal approximation), plus the first t where their count tables diverge,
if any, up to --t-max.
"""

import argparse
import sys

from markov_ehrhart.ehrhart import ehrhart_equivalent
from markov_ehrhart.geometry import hausdorff_distance_sq_upper
from markov_ehrhart.triangles import LimitSpec, limit_triangle, sequence_triangle


def approx(x) -> float:
    if hasattr(x, "rat"):
        return float(x.rat) + float(x.irr) * x.d**0.5
    return float(x)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=int, default=1)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--t-max", type=int, default=40)
    args = parser.parse_args()

    spec = LimitSpec(args.a)
    limit = limit_triangle(spec)
    print(f"{'n':>3}  {'hausdorff^2 <=':>16}  divergence")
    for n in range(args.n_max + 1):
        tri = sequence_triangle(spec, n)
        gap = hausdorff_distance_sq_upper(limit, tri)
        report = ehrhart_equivalent(limit, tri, args.t_max)
        if report["passed"]:
            note = f"counts agree for t <= {args.t_max}"
        else:
            d = report["first_divergence"]
            note = f"counts diverge at t={d['t']} ({d['count_a']} vs {d['count_b']})"
        print(f"{n:>3}  {approx(gap):>16.3e}  {note}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
