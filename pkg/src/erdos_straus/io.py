"""Wire formats: solution rows, verification reports, survey JSONL and figure CSV.

Machine formats are byte-stable: fixed key order, compact separators, '\\n' line ends.
"""

from __future__ import annotations

import csv
import io as _io
import json
from collections.abc import Iterable
from typing import Any

from . import __version__
from .model import Solution
from .reduction import x_from_y
from .structure import VerificationReport, classify

SOLUTION_FIELDS = ("p", "x", "y", "z", "type", "eq5")
FIGURE2_HEADER = ("p", "y", "mod4")


def eq5_holds(s: Solution) -> bool:
    return s.x == x_from_y(s.p, s.y)


def solution_obj(s: Solution) -> dict[str, Any]:
    return {
        "p": s.p,
        "x": s.x,
        "y": s.y,
        "z": s.z,
        "type": str(classify(s)),
        "eq5": eq5_holds(s),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def csv_text(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def solutions_csv(sols: Iterable[Solution]) -> str:
    return csv_text(SOLUTION_FIELDS, ([o[k] for k in SOLUTION_FIELDS] for o in map(solution_obj, sols)))


def solutions_json(p: int, sols: Iterable[Solution], strategy: str) -> str:
    return dumps(
        {
            "version": __version__,
            "p": p,
            "strategy": strategy,
            "solutions": [solution_obj(s) for s in sols],
        }
    )


def solutions_jsonl(sols: Iterable[Solution]) -> str:
    return "".join(dumps(solution_obj(s)) + "\n" for s in sols)


def report_obj(r: VerificationReport) -> list[dict[str, Any]]:
    return [{"check": c.name, "pass": c.passed, "witness": c.witness} for c in r.checks]


def report_json(r: VerificationReport) -> str:
    s = r.solution
    return dumps(
        {
            "version": __version__,
            "solution": {"p": s.p, "x": s.x, "y": s.y, "z": s.z},
            "all_pass": r.all_passed,
            "checks": report_obj(r),
        }
    )


def figure2_csv(rows: Iterable[tuple[int, int, int]]) -> str:
    return csv_text(FIGURE2_HEADER, rows)
