"""Range scans over primes, aggregate statistics, and plotting datasets.

Scans split the prime list into fixed-size chunks that workers process
independently; results are always merged back in ascending p, so the
output never depends on the worker count or chunk size.
"""

from __future__ import annotations

import itertools
import json
import time
from collections import deque
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .arith import MagnitudeError, ceil_div, check_search_magnitude, primes_in
from .io import dumps, eq5_holds
from .model import Solution, SolutionType
from .oracle import ORACLE_CAP, enumerate_all
from .reduction import NoSolutionFound, hybrid_search, search_one_var, search_two_var
from .structure import classify

STRATEGIES = ("oracle", "two-var", "one-var", "hybrid")
DEFAULT_CHUNK = 1024


@dataclass(frozen=True)
class SolutionRow:
    x: int
    y: int
    z: int
    type: SolutionType
    eq5: bool

    def to_obj(self) -> dict[str, Any]:
        return {"x": self.x, "y": self.y, "z": self.z, "type": str(self.type), "eq5": self.eq5}


@dataclass(frozen=True)
class SurveyRecord:
    p: int
    strategy: str
    solutions: tuple[SolutionRow, ...]
    first_y: Optional[int]
    elapsed_ns: Optional[int]
    complete: bool

    def to_json(self) -> str:
        return dumps(
            {
                "p": self.p,
                "strategy": self.strategy,
                "solutions": [r.to_obj() for r in self.solutions],
                "first_y": self.first_y,
                "elapsed_ns": self.elapsed_ns,
                "complete": self.complete,
            }
        )

    @classmethod
    def from_json(cls, line: str) -> "SurveyRecord":
        """Parse one JSONL line; raises ValueError on anything malformed."""
        try:
            obj = json.loads(line)
            rows = tuple(
                SolutionRow(
                    int(r["x"]), int(r["y"]), int(r["z"]), SolutionType(r["type"]), bool(r["eq5"])
                )
                for r in obj["solutions"]
            )
            first_y = obj["first_y"]
            elapsed = obj["elapsed_ns"]
            return cls(
                p=int(obj["p"]),
                strategy=str(obj["strategy"]),
                solutions=rows,
                first_y=None if first_y is None else int(first_y),
                elapsed_ns=None if elapsed is None else int(elapsed),
                complete=bool(obj.get("complete", False)),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ValueError(f"malformed survey record: {exc}") from exc


def solve_with(p: int, strategy: str, enumerate_all_: bool) -> list[Solution]:
    """Solutions for p from one strategy, in the order that strategy finds them.

    hybrid with enumerate_all_ lists everything the two-variable search finds.
    """
    if strategy == "oracle":
        sols = enumerate_all(p)
        return sols if enumerate_all_ else sols[:1]
    if strategy == "two-var":
        sols = search_two_var(p)
        return sols if enumerate_all_ else sols[:1]
    if strategy == "one-var":
        return search_one_var(p, stop_at_first=not enumerate_all_)
    if strategy == "hybrid":
        if enumerate_all_:
            return search_two_var(p)
        try:
            return [hybrid_search(p)]
        except NoSolutionFound:
            return []
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")


def survey_prime(p: int, strategy: str, enumerate_all_: bool, timing: bool = True) -> SurveyRecord:
    t0 = time.perf_counter_ns()
    found = solve_with(p, strategy, enumerate_all_)
    elapsed = time.perf_counter_ns() - t0
    rows = tuple(
        SolutionRow(s.x, s.y, s.z, classify(s), eq5_holds(s))
        for s in sorted(found, key=lambda s: (s.x, s.y))
    )
    return SurveyRecord(
        p=p,
        strategy=strategy,
        solutions=rows,
        first_y=found[0].y if found else None,
        elapsed_ns=elapsed if timing else None,
        complete=enumerate_all_ and strategy != "one-var",
    )


def _scan_chunk(primes: list[int], strategy: str, enumerate_all_: bool, timing: bool) -> list[SurveyRecord]:
    return [survey_prime(p, strategy, enumerate_all_, timing) for p in primes]


def _validate_scan(lo: int, hi: int, strategy: str, oracle_cap: Optional[int]) -> None:
    if lo > hi:
        raise ValueError(f"empty range: from={lo} > to={hi}")
    check_search_magnitude(hi)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")
    if strategy == "oracle" and oracle_cap is not None and hi > oracle_cap:
        raise MagnitudeError(f"oracle strategy is capped at p <= {oracle_cap}, got to={hi}")


def iter_scan(
    lo: int,
    hi: int,
    strategy: str = "hybrid",
    enumerate_all_: bool = False,
    *,
    jobs: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
    timing: bool = True,
    oracle_cap: Optional[int] = ORACLE_CAP,
) -> Iterator[SurveyRecord]:
    """Stream one record per prime in [lo, hi], ascending p for any worker count."""
    _validate_scan(lo, hi, strategy, oracle_cap)
    if chunk_size < 1:
        raise ValueError("chunk_size must be positive")
    primes = primes_in(lo, hi)
    chunks = iter(lambda: list(itertools.islice(primes, chunk_size)), [])
    if jobs <= 1:
        for chunk in chunks:
            yield from _scan_chunk(chunk, strategy, enumerate_all_, timing)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        window: deque = deque()
        for chunk in chunks:
            window.append(pool.submit(_scan_chunk, chunk, strategy, enumerate_all_, timing))
            if len(window) >= 2 * jobs:
                yield from window.popleft().result()
        while window:
            yield from window.popleft().result()


def scan(lo: int, hi: int, strategy: str = "hybrid", enumerate_all_: bool = False, **kw) -> list[SurveyRecord]:
    return list(iter_scan(lo, hi, strategy, enumerate_all_, **kw))


@dataclass(frozen=True)
class Aggregate:
    primes_scanned: int
    solutions_total: int
    type1: int
    type2: int
    eq5_satisfied: int
    type1_eq5_satisfied: int
    failures: tuple[int, ...]
    complete: bool

    @property
    def eq5_rate(self) -> Optional[Fraction]:
        """Exact pooled rate; None stands in for the undefined 0/0."""
        if self.solutions_total == 0:
            return None
        return Fraction(self.eq5_satisfied, self.solutions_total)

    @property
    def eq5_rate_text(self) -> str:
        if self.solutions_total == 0:
            return "0/0"
        return f"{self.eq5_satisfied}/{self.solutions_total}"

    @property
    def eq5_rate_decimal(self) -> str:
        rate = self.eq5_rate
        if rate is None:
            return "n/a"
        # exact half-up rounding to 4 places
        scaled = (rate * 10_000 * 2 + 1) // 2
        return f"{scaled // 10_000}.{scaled % 10_000:04d}"

    def to_obj(self) -> dict[str, Any]:
        return {
            "primes_scanned": self.primes_scanned,
            "solutions_total": self.solutions_total,
            "type1": self.type1,
            "type2": self.type2,
            "eq5_satisfied": self.eq5_satisfied,
            "eq5_rate": self.eq5_rate_text,
            "eq5_rate_decimal": self.eq5_rate_decimal,
            "type1_eq5_satisfied": self.type1_eq5_satisfied,
            "failures": list(self.failures),
            "complete": self.complete,
            "pooling": "all solutions of all primes in range",
        }


def aggregate(records: Iterable[SurveyRecord]) -> Aggregate:
    n = total = t1 = t2 = eq5 = t1_eq5 = 0
    failures = []
    complete = True
    for rec in records:
        n += 1
        complete = complete and rec.complete
        if not rec.solutions:
            failures.append(rec.p)
        for row in rec.solutions:
            total += 1
            if row.type is SolutionType.TYPE_I:
                t1 += 1
                t1_eq5 += row.eq5
            else:
                t2 += 1
            eq5 += row.eq5
    return Aggregate(n, total, t1, t2, eq5, t1_eq5, tuple(failures), complete)


def figure2_dataset(lo: int, hi: int, oracle_cap: Optional[int] = ORACLE_CAP) -> list[tuple[int, int, int]]:
    """(p, y, p mod 4) for every Type I solution of every prime in [lo, hi]."""
    _validate_scan(lo, hi, "oracle", oracle_cap)
    rows = []
    for p in primes_in(lo, hi):
        for s in enumerate_all(p):
            if classify(s) is SolutionType.TYPE_I:
                rows.append((p, s.y, p % 4))
    rows.sort()
    return rows


def special_x_survey(lo: int, hi: int, oracle_cap: Optional[int] = ORACLE_CAP) -> list[tuple[int, list[tuple[int, int, int]]]]:
    """For each prime, the oracle solutions whose x equals ceil(p/2)."""
    _validate_scan(lo, hi, "oracle", oracle_cap)
    out = []
    for p in primes_in(lo, hi):
        h = ceil_div(p, 2)
        out.append((p, [s.triple() for s in enumerate_all(p) if s.x == h]))
    return out
