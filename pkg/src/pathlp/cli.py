"""Command line front end: ``pathlp solve problem.json``.

Input format::

    {"sense": "min" | "max",
     "objective": [c_1, ..., c_v],
     "constraints": [{"coeffs": [a_1, ..., a_v], "rel": "<=" | "=" | ">=", "rhs": b}, ...]}

Variables are implicitly nonnegative.  Exit status: 0 optimal,
1 infeasible or big-M insufficient, 2 numerical failure, 3 input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .central import TraceRecord, Status
from .errors import BoundOverflow, ContractViolation, InvariantViolation, ParseError
from .model import GeneralProblem, Relation, Row, Sense
from .pipeline import DEFAULT_MU_FINAL, Solution, solve

EXIT_OPTIMAL = 0
EXIT_INFEASIBLE = 1
EXIT_NUMERICAL = 2
EXIT_INPUT = 3

_EXIT = {
    Status.OPTIMAL: EXIT_OPTIMAL,
    Status.INFEASIBLE: EXIT_INFEASIBLE,
    Status.BIG_M_INSUFFICIENT_OR_INFEASIBLE: EXIT_INFEASIBLE,
    Status.ILL_CONDITIONED: EXIT_NUMERICAL,
    Status.ITERATION_LIMIT: EXIT_NUMERICAL,
}


def _reject_constant(name):
    raise ParseError(f"non-finite number {name} is not allowed")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number, got {type(value).__name__}")
    value = float(value)
    if not math.isfinite(value):
        raise ParseError(f"{where}: number is not finite")
    return value


def _vector(value, where: str):
    if not isinstance(value, list) or not value:
        raise ParseError(f"{where}: expected a non-empty list of numbers")
    return tuple(_number(v, f"{where}[{i}]") for i, v in enumerate(value))


def parse_problem(text) -> GeneralProblem:
    """Parse the JSON problem format (``bytes`` or ``str``)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("sense", "objective", "constraints"):
        if key not in doc:
            raise ParseError(f"missing field '{key}'")

    try:
        sense = Sense(doc["sense"])
    except ValueError:
        raise ParseError(f"sense: expected 'min' or 'max', got {doc['sense']!r}") from None
    objective = _vector(doc["objective"], "objective")
    cons = doc["constraints"]
    if not isinstance(cons, list) or not cons:
        raise ParseError("constraints: expected a non-empty list")

    rows = []
    for i, con in enumerate(cons):
        where = f"constraints[{i}]"
        if not isinstance(con, dict):
            raise ParseError(f"{where}: expected an object")
        missing = {"coeffs", "rel", "rhs"} - con.keys()
        if missing:
            raise ParseError(f"{where}: missing field(s) {sorted(missing)}")
        coeffs = _vector(con["coeffs"], f"{where}.coeffs")
        if len(coeffs) != len(objective):
            raise ParseError(
                f"{where}.coeffs: {len(coeffs)} entries, objective has {len(objective)}"
            )
        try:
            rel = Relation(con["rel"])
        except ValueError:
            raise ParseError(f"{where}.rel: unknown relation {con['rel']!r}") from None
        rows.append(Row(coeffs, rel, _number(con["rhs"], f"{where}.rhs")))
    return GeneralProblem(sense, objective, tuple(rows))


def dump_problem(p: GeneralProblem) -> str:
    doc = {
        "sense": p.sense.value,
        "objective": list(p.objective),
        "constraints": [
            {"coeffs": list(r.coeffs), "rel": r.relation.value, "rhs": r.rhs} for r in p.rows
        ],
    }
    return json.dumps(doc)


@dataclass
class SolveConfig:
    path: str
    mu_final: float = DEFAULT_MU_FINAL
    max_iters: Optional[int] = None
    w: Optional[float] = None
    big_m: Optional[float] = None
    trace: Optional[str] = None
    json: bool = False
    quiet: bool = False


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return format(value, ".17g")


def write_trace(path: str, trace) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TraceRecord.FIELDS)
        for rec in trace:
            writer.writerow([_fmt(getattr(rec, name)) for name in TraceRecord.FIELDS])


def _floats(arr):
    return None if arr is None else [float(v) for v in np.asarray(arr)]


def solution_to_json(sol: Solution) -> dict:
    rep = sol.report
    doc = {
        "status": sol.status.value,
        "objective": None if math.isnan(sol.objective) else sol.objective,
        "x": _floats(sol.x),
        "message": sol.message,
        "warnings": sol.warnings,
        "W": None if math.isnan(sol.W) else sol.W,
    }
    if rep is not None:
        doc["report"] = {
            "status": rep.status.value,
            "x": _floats(rep.x),
            "y": _floats(rep.y),
            "s": _floats(rep.s),
            "primal_obj": rep.primal_obj,
            "dual_obj": rep.dual_obj,
            "gap": rep.gap,
            "iterations": rep.iterations,
            "trace": [
                {name: getattr(rec, name) for name in TraceRecord.FIELDS} for rec in rep.trace
            ],
        }
    return doc


def _print_human(sol: Solution, out) -> None:
    print(f"status:     {sol.status.value}", file=out)
    if sol.report is not None:
        print(f"iterations: {sol.report.iterations}", file=out)
    if sol.x is not None:
        print(f"objective:  {sol.objective:.12g}", file=out)
        for i, v in enumerate(sol.x):
            print(f"  x{i + 1} = {v:.12g}", file=out)
    if sol.message:
        print(f"note:       {sol.message}", file=out)
    for w in sol.warnings:
        print(f"warning:    {w}", file=out)


def run_solve(config: SolveConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with open(config.path, "rb") as fh:
            problem = parse_problem(fh.read())
    except OSError as exc:
        print(f"error: cannot read {config.path}: {exc}", file=err)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"error: {config.path}: {exc}", file=err)
        return EXIT_INPUT

    try:
        sol = solve(problem, mu_final=config.mu_final, W=config.w, M=config.big_m,
                    max_iters=config.max_iters)
    except (ContractViolation, BoundOverflow) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"error: numerical breakdown: {exc}", file=err)
        return EXIT_NUMERICAL

    if config.trace and sol.report is not None:
        try:
            write_trace(config.trace, sol.report.trace)
        except OSError as exc:
            print(f"error: cannot write trace {config.trace}: {exc}", file=err)
            return EXIT_INPUT
    if config.json:
        json.dump(solution_to_json(sol), out, indent=2)
        print(file=out)
    elif not config.quiet:
        _print_human(sol, out)
    return _EXIT[sol.status]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathlp", description="Primal-dual path-following LP solver")
    sub = parser.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("solve", help="solve a JSON problem file")
    sp.add_argument("path")
    sp.add_argument("--mu-final", type=float, default=DEFAULT_MU_FINAL,
                    help="final barrier parameter, in units of the original objective")
    sp.add_argument("--max-iters", type=int, default=None)
    sp.add_argument("--w", type=float, default=None, help="bound on optimal coordinates")
    sp.add_argument("--big-m", type=float, default=None)
    sp.add_argument("--trace", default=None, help="write per-iteration CSV here")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--quiet", action="store_true")
    sp.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    config = SolveConfig(args.path, args.mu_final, args.max_iters, args.w, args.big_m,
                         args.trace, args.json, args.quiet)
    return run_solve(config)


if __name__ == "__main__":
    sys.exit(main())
