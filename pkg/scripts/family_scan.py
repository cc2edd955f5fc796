#!/usr/bin/env python3
"""Pseudo-integrality scan over the two-parameter triangle family.

Sweeps coprime pairs (b, c) up to the given bounds, streams each count
table against the quadratic through its first three values, and writes one
CSV row per pair.  A pair is a hit when the whole certificate range stays
quadratic (period 1); rows also record whether (a, b, c) is a Markov triple
and whether q lies in the matching companion class.
"""

import argparse
import csv
import sys

from markov_ehrhart.ehrhart import scan_open_problem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=int, default=1)
    parser.add_argument("--q", type=int, default=1)
    parser.add_argument("--b-max", type=int, default=34)
    parser.add_argument("--c-max", type=int, default=34)
    parser.add_argument("--t-budget", type=int, default=4000)
    parser.add_argument("--hits-only", action="store_true")
    args = parser.parse_args()

    records = scan_open_problem(
        args.a,
        args.q,
        range(1, args.b_max + 1),
        range(1, args.c_max + 1),
        args.t_budget,
    )
    writer = csv.writer(sys.stdout)
    writer.writerow(
        ["b", "c", "denominator", "pseudo_integral", "markov_triple", "companion_matches", "verdict"]
    )
    for r in records:
        if args.hits_only and r["pseudo_integral"] is not True:
            continue
        writer.writerow(
            [
                r["b"],
                r["c"],
                r["denominator"],
                r["pseudo_integral"],
                r["markov_triple"],
                r["companion_matches"],
                r["verdict"],
            ]
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
