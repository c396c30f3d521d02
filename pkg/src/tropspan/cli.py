"""Command line front end for the scheduling solvers.

Subcommands
    sf        completion-time span under start-finish constraints
    ss        initiation-time span under start-start constraints
    combined  completion-time span under both constraint kinds

The input file is a json document {"n": ..., "start_finish": [[...]],
"start_start": [[...]]} with square arrays of numbers; start_start may
use null where no lag is defined.  Results go to stdout as json
(default) or text, diagnostics to stderr.  Exit status: 0 solved, 2
infeasible constraints, 3 input violating a solver precondition, 4
unparseable input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .errors import (InvariantViolation, NotIrreducible, NotRegular, NotSquare,
                     ShapeMismatch, TrConditionViolated, ZeroEntry, ZeroRightHandSide)
from .matvec import Matrix
from .scheduling import (Project, latest_schedule, max_completion_spread,
                         max_completion_spread_constrained, max_initiation_spread)
from .semiring import max_plus

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_INVALID = 3
EXIT_PARSE = 4

_INVALID_INPUT_ERRORS = (InvariantViolation, NotRegular, NotIrreducible, NotSquare,
                         ShapeMismatch, ZeroEntry, ZeroRightHandSide, ValueError)


class _ParseFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ParseFailure(message)


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value != value or value in (float("inf"), float("-inf")):
        raise argparse.ArgumentTypeError("alpha must be finite")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="tropspan",
                     description="maximize schedule time spans under precedence constraints")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("sf", "span of completion times under start-finish constraints"),
                       ("ss", "span of initiation times under start-start constraints"),
                       ("combined", "span of completion times under both constraint kinds")):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("--input", required=True, help="path to the project json file")
        cmd.add_argument("--alpha", type=_number, default=0,
                         help="shift applied to the reported solutions (default 0)")
        cmd.add_argument("--latest", action="store_true",
                         help="also emit the latest schedule of every family")
        cmd.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _load_project(path: str) -> Project:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _ParseFailure(f"cannot read {path}: {exc}")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _ParseFailure(f"{path}: not valid json: {exc}")
    if not isinstance(raw, dict):
        raise _ParseFailure(f"{path}: the top level must be an object")
    unknown = sorted(set(raw) - {"n", "start_finish", "start_start"})
    if unknown:
        raise _ParseFailure(f"{path}: unknown keys {unknown}")
    n = raw.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise _ParseFailure(f"{path}: 'n' must be a positive integer")
    start_finish = _parse_matrix(raw, "start_finish", n, path, allow_null=False)
    start_start = _parse_matrix(raw, "start_start", n, path, allow_null=True)
    if start_finish is None and start_start is None:
        raise _ParseFailure(f"{path}: provide start_finish, start_start, or both")
    return Project(n=n, start_finish=start_finish, start_start=start_start)


def _parse_matrix(raw: dict, key: str, n: int, path: str,
                  allow_null: bool) -> Matrix | None:
    rows = raw.get(key)
    if rows is None:
        return None
    if not isinstance(rows, list) or len(rows) != n:
        raise _ParseFailure(f"{path}: '{key}' must be a list of {n} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise _ParseFailure(f"{path}: row {i + 1} of '{key}' must hold {n} entries")
        for j, v in enumerate(row):
            if v is None:
                if not allow_null:
                    raise _ParseFailure(
                        f"{path}: '{key}' does not admit null "
                        f"(row {i + 1}, column {j + 1})")
                continue
            if isinstance(v, bool) or not isinstance(v, (int, float)) \
                    or not math.isfinite(v):
                raise _ParseFailure(
                    f"{path}: entry at row {i + 1}, column {j + 1} of "
                    f"'{key}' must be a finite number or null")
    return Matrix(max_plus, rows)


def dump_project(project: Project) -> dict:
    """Inverse of the file parser; finite values kept exactly, 𝟘 as null."""
    doc: dict = {"n": project.n}
    if project.start_finish is not None:
        doc["start_finish"] = [[_plain(v) for v in row]
                               for row in project.start_finish.data]
    if project.start_start is not None:
        doc["start_start"] = [[None if v == max_plus.zero else _plain(v) for v in row]
                              for row in project.start_start.data]
    return doc


def _plain(v):
    if isinstance(v, float) and v.is_integer():
        return int(v)
    return v


def _dispatch(command: str, project: Project):
    if command == "sf":
        if project.start_finish is None:
            raise InvariantViolation("subcommand sf requires a start_finish matrix")
        return max_completion_spread(project.start_finish), None, project.start_finish
    if command == "ss":
        if project.start_start is None:
            raise InvariantViolation("subcommand ss requires a start_start matrix")
        report, closure = max_initiation_spread(project.start_start)
        return report, closure, None
    if project.start_finish is None or project.start_start is None:
        raise InvariantViolation(
            "subcommand combined requires both start_finish and start_start matrices")
    report, closure = max_completion_spread_constrained(
        project.start_finish, project.start_start)
    return report, closure, project.start_finish


def _document(report, closure, completion_matrix, alpha, latest) -> dict:
    families = [fam.scaled(alpha) for fam in report.families]
    schedules = (latest_schedule(report, closure, completion_matrix, alpha)
                 if latest else [])
    doc = {
        "status": "ok",
        "delta": _plain(report.delta),
        "pairs": [{"k": k + 1, "s": s + 1} for k, s in report.pairs],
        "families": [{
            "pinned_index": fam.pinned_index + 1,
            "pinned_value": _plain(fam.pinned_value),
            "upper_bounds": [_plain(b) for b in fam.upper_bounds],
        } for fam in families],
        "schedules": [],
    }
    for sched in schedules:
        entry = {"initiation": [_plain(v) for v in sched.initiation.entries()]}
        if sched.completion is not None:
            entry["completion"] = [_plain(v) for v in sched.completion.entries()]
        entry["span"] = _plain(sched.span)
        doc["schedules"].append(entry)
    return doc


def _status_document(status: str) -> dict:
    return {"status": status, "delta": None, "pairs": [], "families": [], "schedules": []}


def _render(doc: dict, fmt: str, u_space: bool) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"status: {doc['status']}"]
    if doc["status"] == "ok":
        var = "u" if u_space else "x"
        lines.append(f"delta: {doc['delta']}")
        for pair, fam in zip(doc["pairs"], doc["families"]):
            parts = []
            for j, bound in enumerate(fam["upper_bounds"], start=1):
                op = "=" if j == fam["pinned_index"] else "<="
                parts.append(f"{var}{j} {op} {bound}")
            lines.append(f"family k={pair['k']} s={pair['s']}: " + ", ".join(parts))
        for sched in doc["schedules"]:
            piece = f"schedule: initiation = ({', '.join(map(str, sched['initiation']))})"
            if "completion" in sched:
                piece += f", completion = ({', '.join(map(str, sched['completion']))})"
            piece += f", span = {sched['span']}"
            lines.append(piece)
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        project = _load_project(args.input)
        report, closure, completion_matrix = _dispatch(args.command, project)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.stdout.write(_render(_status_document("invalid_input"), args.format, False))
        return EXIT_PARSE
    except TrConditionViolated as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        sys.stdout.write(_render(_status_document("infeasible"), args.format, False))
        return EXIT_INFEASIBLE
    except _INVALID_INPUT_ERRORS as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        sys.stdout.write(_render(_status_document("invalid_input"), args.format, False))
        return EXIT_INVALID

    doc = _document(report, closure, completion_matrix, args.alpha, args.latest)
    sys.stdout.write(_render(doc, args.format, closure is not None))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
