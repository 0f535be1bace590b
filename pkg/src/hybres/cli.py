"""Command-line interface.

Exit codes: 0 success, 1 malformed input, 2 invalid mathematical input,
3 failed check.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional

from .checks import SUITES, run_suite
from .core import ResultantOptions, assemble, evaluate, setup
from .errors import InvalidProblem, MathematicalError
from .geometry import normalized_area, polygon_from_support, squareness_counts
from .io import ProblemFile, complete_support, format_rational, load_problem, parse_coefficients, parse_vertex
from .linalg import determinant

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_CHECK = 0, 1, 2, 3


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _table(row_labels, col_labels, cells) -> str:
    head = [""] + list(col_labels)
    body = [[r] + list(row) for r, row in zip(row_labels, cells)]
    widths = [max(len(str(line[j])) for line in [head] + body) for j in range(len(head))]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(line, widths)) for line in [head] + body]
    return "\n".join(lines)


def cmd_polytope(prob: ProblemFile, fmt: str) -> int:
    poly = polygon_from_support(prob.support)
    c = squareness_counts(poly)
    area = normalized_area(poly)
    ok = c["rows"] == c["cols"]
    report = {
        "facets": [{"index": f.index, "normal": list(f.normal), "offset": format_rational(f.offset)} for f in poly.facets],
        "vertices": [v.as_list() for v in poly.vertices],
        "num_Q": c["Q"],
        "num_int_Q": c["int_Q"],
        "num_int_2Q": c["int_2Q"],
        "normalized_area": area,
        "squareness": {"rows": c["rows"], "cols": c["cols"], "ok": ok},
    }
    lines = ["facets:"]
    for f in poly.facets:
        lines.append(f"  {f.index}: normal=({f.normal[0]},{f.normal[1]}) offset={format_rational(f.offset)}")
    lines.append(f"#Q={c['Q']} #int(Q)={c['int_Q']} #int(2Q)={c['int_2Q']}")
    lines.append(f"normalized area: {area}")
    lines.append(
        f"squareness: 3 + #int(2Q) = {c['rows']}, #Q + 3*#int(Q) = {c['cols']}: {c['rows']}={c['cols']} {'OK' if ok else 'FAIL'}"
    )
    _emit(report, fmt, "\n".join(lines))
    return EXIT_OK


def cmd_partition(prob: ProblemFile, fmt: str) -> int:
    s = setup(prob.support, ResultantOptions(prob.vertex))
    report = s.partition.to_json()
    text = (
        f"vertex p = {s.partition.vertex_p!r} (eta1 = facet {s.partition.eta1_index}, eta2 = facet {s.partition.eta2_index})\n"
        f"R1 = {list(s.partition.R1)}\nR2 = {list(s.partition.R2)}\nR3 = {list(s.partition.R3)}\n"
        f"refined = {json.dumps(report['refined'])}"
    )
    _emit(report, fmt, text)
    return EXIT_OK


def cmd_matrix(prob: ProblemFile, fmt: str, symbolic: bool) -> int:
    s = setup(prob.support, ResultantOptions(prob.vertex))
    hm = assemble(s.support, s.polygon, s.partition)
    if symbolic:
        cells = hm.render()
    else:
        if prob.coefficients is None:
            raise InvalidProblem("numeric matrix needs coefficients (or pass --symbolic)")
        cells = [[format_rational(x) for x in row] for row in evaluate(hm, prob.coefficients)]
    report = {
        "size": hm.size,
        "symbolic": symbolic,
        "rows": list(hm.row_labels),
        "columns": list(hm.col_labels),
        "cells": cells,
    }
    _emit(report, fmt, _table(hm.row_labels, hm.col_labels, cells))
    return EXIT_OK


def cmd_resultant(prob: ProblemFile, fmt: str) -> int:
    if prob.coefficients is None:
        raise InvalidProblem("resultant needs coefficients")
    s = setup(prob.support, ResultantOptions(prob.vertex))
    hm = assemble(s.support, s.polygon, s.partition)
    val = determinant(evaluate(hm, prob.coefficients))
    report = {
        "resultant": format_rational(val),
        "matrix_size": hm.size,
        "degree_per_poly": normalized_area(s.polygon),
    }
    text = f"resultant: {report['resultant']}\nmatrix_size: {hm.size}\ndegree_per_poly: {report['degree_per_poly']}"
    _emit(report, fmt, text)
    return EXIT_OK


def cmd_check(prob: Optional[ProblemFile], fmt: str, suite: str, trials: Optional[int], seed: Optional[int]) -> int:
    support = prob.support if prob is not None else None
    options = ResultantOptions(prob.vertex) if prob is not None else None
    if seed is None:
        seed = prob.seed if prob is not None else 0
    rep = run_suite(suite, support, trials, seed, options)
    if fmt == "json":
        out = rep.records if suite == "delta" else rep.to_json()
        print(json.dumps(out, indent=2))
    else:
        for line in rep.lines:
            print(line)
        print(f"{suite}: {rep.passed}/{rep.total} pass -> {'OK' if rep.ok else 'FAILED'}")
    return EXIT_OK if rep.ok else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vertex", default=argparse.SUPPRESS, help="distinguished vertex 'x,y'")
    common.add_argument(
        "--complete-support",
        action="store_true",
        default=argparse.SUPPRESS,
        help="insert missing hull lattice points with zero coefficients",
    )
    common.add_argument("--coefficients", metavar="FILE", default=argparse.SUPPRESS, help="JSON file with 'coefficients'")
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="hybres", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("polytope", "partition", "resultant"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("problem", nargs="?", help="problem JSON file ('-' or omitted: stdin)")
    p = sub.add_parser("matrix", parents=[common])
    p.add_argument("problem", nargs="?")
    p.add_argument("--symbolic", action="store_true")
    p = sub.add_parser("check", parents=[common])
    p.add_argument("suite", choices=SUITES)
    p.add_argument("problem", nargs="?")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    return parser


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidProblem(str(exc)) from None


def _load(args) -> Optional[ProblemFile]:
    if args.command == "check" and args.suite in ("ehrhart", "macaulay") and args.problem is None:
        return None
    prob = load_problem(_read(args.problem))
    if getattr(args, "vertex", None) is not None:
        prob.vertex = parse_vertex(args.vertex)
    if getattr(args, "coefficients", None) is not None:
        data = json.loads(_read(args.coefficients))
        prob.coefficients = parse_coefficients(data.get("coefficients"), len(prob.support))
    if getattr(args, "complete_support", False) or prob.complete_support:
        prob = complete_support(prob)
    return prob


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    default_fmt = "json" if args.command in ("partition", "resultant") else "text"
    fmt = getattr(args, "format", default_fmt)
    try:
        prob = _load(args)
        if args.command == "polytope":
            return cmd_polytope(prob, fmt)
        if args.command == "partition":
            return cmd_partition(prob, fmt)
        if args.command == "matrix":
            return cmd_matrix(prob, fmt, args.symbolic)
        if args.command == "resultant":
            return cmd_resultant(prob, fmt)
        return cmd_check(prob, fmt, args.suite, args.trials, args.seed)
    except InvalidProblem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MathematicalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
