"""Command-line interface: ``ifnrank eval|rank|dist|tables|check``.

Exit status is 0 on success, 1 for unreadable or invalid input and 2 for a
numeric failure (quadrature not converging, oracle sweep out of tolerance).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import tables
from .core import TrifnError
from .datasets import DatasetError, load
from .indices import check_lambda, components, va_index
from .metric import check_p, trifn_distance
from .oracle import QuadratureError
from .ranking import DEFAULT_TIE_EPSILON, rank
from .verify import oracle_sweep

EXIT_INPUT = 1
EXIT_NUMERIC = 2
CHECK_TOL = 1e-8


def _rounded(values: dict, precision: int) -> dict:
    return {k: round(v, precision) for k, v in values.items()}


def _emit_tsv(header, rows, out):
    print("\t".join(header), file=out)
    for row in rows:
        print("\t".join(str(c) for c in row), file=out)


def cmd_eval(args, out):
    rows = []
    for rec in load(args.file):
        n = rec.to_trifn()
        c = components(n)
        idx = va_index(n, args.lam)
        rows.append((rec.id, {"V_mu": c.v_mu, "V_nu": c.v_nu, "A_mu": c.a_mu, "A_nu": c.a_nu,
                              "V": idx.value, "A": idx.ambiguity}))
    if args.format == "json":
        json.dump({"lambda": args.lam, "rows": [
            {"id": i, "values": v, "rounded": _rounded(v, args.precision)} for i, v in rows
        ]}, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        header = ["id", "V_mu", "V_nu", "A_mu", "A_nu", "V", "A"]
        _emit_tsv(header, [[i, *(f"{x:.{args.precision}f}" for x in v.values())] for i, v in rows], out)


def cmd_rank(args, out):
    items = [(rec.id, rec.to_trifn()) for rec in load(args.file)]
    outcome = rank(items, p=args.p, lam=args.lam, tie_epsilon=args.tie_eps)
    if args.format == "json":
        json.dump({
            "p": outcome.p, "lambda": outcome.lam, "tie_epsilon": outcome.tie_epsilon,
            "entries": [{"id": i, "rho": r, "rounded": round(r, args.precision)} for i, r in outcome.entries],
            "tie_groups": [list(g) for g in outcome.tie_groups],
            "order": outcome.render(),
        }, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        position = {}
        for k, group in enumerate(outcome.tie_groups, start=1):
            for ident in group:
                position[ident] = k
        _emit_tsv(["rank", "id", "rho"],
                  [[position[i], i, f"{r:.{args.precision}f}"] for i, r in outcome.entries], out)
        print(f"order\t{outcome.render()}", file=out)


def cmd_dist(args, out):
    items = [(rec.id, rec.to_trifn()) for rec in load(args.file)]
    ids = [i for i, _ in items]
    matrix = [[trifn_distance(args.p, x, y, args.lam) for _, y in items] for _, x in items]
    if args.format == "json":
        json.dump({"p": args.p, "lambda": args.lam, "ids": ids, "matrix": matrix,
                   "rounded": [[round(d, args.precision) for d in row] for row in matrix]},
                  out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        _emit_tsv(["id", *ids], [[i, *(f"{d:.{args.precision}f}" for d in row)] for i, row in zip(ids, matrix)], out)


def cmd_tables(args, out):
    if args.format == "json":
        cells = tables.index_table_cells() + tables.comparison_cells()
        orders = tables.index_table_orders() + tables.comparison_orders() + tables.example_orders()
        json.dump({
            "cells": [{"table": c.table, "set": c.set, "id": c.ident, "column": c.column,
                       "computed": c.computed, "printed": c.printed, "delta": c.delta,
                       "ok": c.ok, "note": c.note} for c in cells],
            "orders": [{"table": o.table, "set": o.set, "column": o.column, "computed": o.computed,
                        "printed": o.printed, "ok": o.ok, "note": o.note} for o in orders],
        }, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        print(tables.discrepancy_report(args.precision), file=out)


def cmd_check(args, out):
    result = oracle_sweep(args.samples, args.seed)
    if args.format == "json":
        json.dump({"samples": result.samples, "max_component_dev": result.max_component_dev,
                   "max_distance_dev": result.max_distance_dev, "tolerance": CHECK_TOL}, out, indent=2)
        out.write("\n")
    else:
        print(f"samples\t{result.samples}", file=out)
        print(f"max_component_dev\t{result.max_component_dev:.3e}", file=out)
        print(f"max_distance_dev\t{result.max_distance_dev:.3e}", file=out)
    if result.max_dev > CHECK_TOL:
        print(f"error: oracle deviation {result.max_dev:.3e} exceeds {CHECK_TOL:g}", file=sys.stderr)
        return EXIT_NUMERIC
    return 0


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=float, default=2.0, help="L_p exponent, > 1 (default 2)")
    common.add_argument("--lambda", dest="lam", type=float, default=0.5,
                        help="value/ambiguity blend weight in [0, 1] (default 0.5)")
    common.add_argument("--tie-eps", type=float, default=DEFAULT_TIE_EPSILON,
                        help="scores closer than this rank as equivalent")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--precision", type=int, default=4, help="decimal places (default 4)")

    parser = argparse.ArgumentParser(prog="ifnrank", description="Rank intuitionistic fuzzy numbers.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("eval", "value and ambiguity indices"),
                            ("rank", "rank by signed distance to the origin"),
                            ("dist", "pairwise distance matrix")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="dataset file (line format or JSON)")
    sub.add_parser("tables", parents=[common], help="regenerate the published tables")
    check = sub.add_parser("check", parents=[common], help="closed forms vs. quadrature sweep")
    check.add_argument("--samples", type=_positive, default=1000)
    check.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {"eval": cmd_eval, "rank": cmd_rank, "dist": cmd_dist, "tables": cmd_tables, "check": cmd_check}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        check_p(args.p)
        check_lambda(args.lam)
        if not args.tie_eps >= 0:
            raise TrifnError("--tie-eps must be >= 0")
        if args.precision < 0:
            raise TrifnError("--precision must be >= 0")
        return COMMANDS[args.command](args, out) or 0
    except (DatasetError, TrifnError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (QuadratureError, ArithmeticError) as exc:
        print(f"error: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
