#!/usr/bin/env python3
"""Survey of minimal Ehrhart periods over the Markov tree.

For every tree triple this certifies the minimal period of the standard
normal-form triangle and of its p1-dilate, and reports both next to the
full denominator.  Triangles whose denominator exceeds the cap are listed
as skipped instead of stalling the survey.
"""

import argparse
import csv
import sys

from markov_ehrhart.ehrhart import certify_minimal_period
from markov_ehrhart.errors import BudgetExceeded
from markov_ehrhart.markov import tree
from markov_ehrhart.triangles import StandardPositionSpec, denominator, standard_triangle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--generations", type=int, default=4)
    parser.add_argument("--den-cap", type=int, default=2000)
    parser.add_argument("--csv", action="store_true", help="machine-readable output")
    args = parser.parse_args()

    rows = []
    for node in tree(args.generations):
        triple = node.triple
        tri = standard_triangle(StandardPositionSpec(triple))
        den = denominator(tri)
        try:
            period, _ = certify_minimal_period(tri, args.den_cap)
            dilate_period, _ = certify_minimal_period(tri.scale(triple.p1), args.den_cap)
        except BudgetExceeded as exc:
            rows.append((triple.as_tuple(), den, "skipped", "skipped", str(exc)))
            continue
        rows.append((triple.as_tuple(), den, period, dilate_period, ""))

    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["p1", "p2", "p3", "denominator", "period", "dilate_period", "note"])
        for triple, den, period, dilate, note in rows:
            writer.writerow([*triple, den, period, dilate, note])
    else:
        print(f"{'triple':>14}  {'den':>6}  {'period':>7}  {'p1-dilate':>9}")
        for triple, den, period, dilate, note in rows:
            extra = f"  ({note})" if note else ""
            print(f"{str(triple):>14}  {den:>6}  {period!s:>7}  {dilate!s:>9}{extra}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
