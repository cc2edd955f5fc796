"""Command-line surface.

Subcommands: tree, triangle, count, certify, verify-theorem, equiv, scan.
Reports are deterministic; machine-readable output contains only exact
integer/fraction strings.  Exit codes: 0 ok, 1 verification failure,
2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import CHECKS
from .ehrhart import (
    certify_minimal_period,
    count_table,
    ehrhart_equivalent,
    scan_open_problem,
)
from .errors import BudgetExceeded
from .exact import format_scalar
from .geometry import IrrationalDirection, integral_barycentre
from .specs import SpecError, parse_triangle_spec
from .markov import tree, tree_to_json
from .triangles import denominator

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET_EXCEEDED = 3


def _emit_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=False))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markov-ehrhart",
        description="Exact Markov-triangle construction, lattice-point counting "
        "and Ehrhart period certification.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("tree", help="enumerate the Markov tree")
    p.add_argument("--generations", type=int, required=True)
    p.add_argument("--output", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("triangle", help="build a triangle and print its data")
    p.add_argument("--spec", required=True)
    p.add_argument("--output", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("count", help="lattice-point count table")
    p.add_argument("--spec", required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--output", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("certify", help="certify the minimal Ehrhart period")
    p.add_argument("--spec", required=True)
    p.add_argument("--den-cap", type=int, default=2000)
    p.add_argument("--output", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("verify-theorem", help="run a verification suite")
    p.add_argument("name", choices=sorted(CHECKS))
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--scale", type=int, default=None, help="cases for randomized suites")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("equiv", help="compare two count tables")
    p.add_argument("--spec-a", required=True)
    p.add_argument("--spec-b", required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--output", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("scan", help="pseudo-integrality scan of the family")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--c-max", type=int, required=True)
    p.add_argument("--t", type=int, default=2000, help="sample budget per pair")
    p.add_argument("--output", choices=("json", "csv", "text"), default="text")
    return parser


def _cmd_tree(args) -> int:
    if args.generations < 1:
        print("error: --generations must be >= 1", file=sys.stderr)
        return EXIT_INVALID_INPUT
    nodes = tree(args.generations)
    if args.output == "json":
        _emit_json(tree_to_json(nodes))
    elif args.output == "csv":
        print("generation,p1,p2,p3,parent,mutated_index")
        for node in nodes:
            parent = "" if node.parent is None else node.parent
            mutated = "" if node.mutated_index is None else node.mutated_index
            print(f"{node.generation},{node.triple.p1},{node.triple.p2},{node.triple.p3},{parent},{mutated}")
    else:
        for node in nodes:
            print(f"gen {node.generation}: {node.triple}")
    return EXIT_OK


def _triangle_report(tri) -> dict:
    report = {"vertices": tri.to_json_dict()}
    if tri.is_rational():
        report["denominator"] = denominator(tri)
    try:
        beta = integral_barycentre(tri)
        report["barycentre"] = [format_scalar(beta[0]), format_scalar(beta[1])]
    except IrrationalDirection:
        report["barycentre"] = None
    return report


def _cmd_triangle(args) -> int:
    tri = parse_triangle_spec(args.spec)
    report = _triangle_report(tri)
    if args.output == "json":
        _emit_json(report)
    else:
        for label, (xs, ys) in report["vertices"].items():
            print(f"vertex {label}: ({xs}, {ys})")
        if "denominator" in report:
            print(f"denominator: {report['denominator']}")
        beta = report["barycentre"]
        print(f"barycentre: ({beta[0]}, {beta[1]})" if beta else "barycentre: undefined")
    return EXIT_OK


def _cmd_count(args) -> int:
    if args.t_max < 0:
        print("error: --t-max must be >= 0", file=sys.stderr)
        return EXIT_INVALID_INPUT
    tri = parse_triangle_spec(args.spec)
    table = count_table(tri, args.t_max)
    if args.output == "json":
        _emit_json(table.to_json_dict())
    elif args.output == "csv":
        sys.stdout.write(table.to_csv())
    else:
        for t, c in table.samples:
            print(f"L({t}) = {c}")
    return EXIT_OK


def _cmd_certify(args) -> int:
    tri = parse_triangle_spec(args.spec)
    if not tri.is_rational():
        print("error: certification requires a rational triangle", file=sys.stderr)
        return EXIT_INVALID_INPUT
    period, qp = certify_minimal_period(tri, args.den_cap)
    report = {
        "denominator": denominator(tri),
        "period": period,
        "quasipolynomial": qp.to_json_dict(),
    }
    if args.output == "json":
        _emit_json(report)
    else:
        print(f"denominator: {report['denominator']}")
        print(f"minimal period: {period}")
        for cls in report["quasipolynomial"]["classes"]:
            c2, c1, c0 = cls["coefficients"]
            print(f"class {cls['residue']}: ({c2})*t^2 + ({c1})*t + ({c0})")
    return EXIT_OK


def _cmd_verify(args) -> int:
    description, fn = CHECKS[args.name]
    kwargs = {}
    if args.a is not None:
        kwargs["a"] = args.a
    if args.n is not None:
        kwargs["n"] = args.n
    if args.t_max is not None:
        kwargs["t_max"] = args.t_max
    if args.scale is not None:
        kwargs["cases"] = args.scale
    if args.seed is not None:
        kwargs["seed"] = args.seed
    try:
        passed, evidence = fn(**kwargs)
    except TypeError as exc:
        print(f"error: option not supported by {args.name}: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    report = {"check": args.name, "description": description, "passed": passed, "evidence": evidence}
    if args.output == "json":
        _emit_json(report)
    else:
        print(f"{args.name}: {description}")
        print("PASS" if passed else "FAIL")
        print(json.dumps(evidence, indent=2))
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILURE


def _cmd_equiv(args) -> int:
    tri_a = parse_triangle_spec(args.spec_a)
    tri_b = parse_triangle_spec(args.spec_b)
    report = ehrhart_equivalent(tri_a, tri_b, args.t_max)
    if args.output == "json":
        _emit_json(report)
    else:
        print("equivalent" if report["passed"] else f"diverge: {report['first_divergence']}")
    return EXIT_OK if report["passed"] else EXIT_VERIFICATION_FAILURE


def _cmd_scan(args) -> int:
    records = scan_open_problem(
        args.a, args.q, range(1, args.b_max + 1), range(1, args.c_max + 1), args.t
    )
    if args.output == "json":
        _emit_json({"records": records})
    elif args.output == "csv":
        print("b,c,denominator,pseudo_integral,markov_triple,companion_matches")
        for r in records:
            pi = "" if r["pseudo_integral"] is None else str(r["pseudo_integral"]).lower()
            print(
                f"{r['b']},{r['c']},{r['denominator']},{pi},"
                f"{str(r['markov_triple']).lower()},{str(r['companion_matches']).lower()}"
            )
    else:
        for r in records:
            print(f"b={r['b']} c={r['c']}: {r['verdict']}")
    return EXIT_OK


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID_INPUT if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "tree": _cmd_tree,
        "triangle": _cmd_triangle,
        "count": _cmd_count,
        "certify": _cmd_certify,
        "verify-theorem": _cmd_verify,
        "equiv": _cmd_equiv,
        "scan": _cmd_scan,
    }
    try:
        return handlers[args.subcommand](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXCEEDED
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
