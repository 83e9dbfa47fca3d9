"""Brute-force ground truth.

Only elementary bounds are used here (1/x < 4/p <= 3/x and
1/y < 4/p - 1/x <= 2/y), which are deliberately looser than anything
the reduction module relies on, so its bounds stay falsifiable.
"""

from __future__ import annotations

from typing import Optional

import numba
import numpy as np

from .arith import check_search_magnitude, floor_div
from .model import Bounds, Solution, SolutionError, make_solution, require_prime

_INT64_MAX = np.iinfo(np.int64).max
#: Default upper limit on p for oracle-backed commands; enumeration is O(p^2 log p).
ORACLE_CAP = 50_000


def elementary_x_range(p: int) -> Bounds:
    return Bounds(max(1, p // 4), (3 * p) // 4 + 1)


def elementary_y_range(p: int, x: int) -> Bounds:
    k = 4 * x - p
    if k <= 0:
        return Bounds(1, 0)
    return Bounds(floor_div(x * p, k) + 1, floor_div(2 * x * p, k))


def z_candidate(p: int, x: int, y: int) -> Optional[int]:
    """z = xyp / (4xy - (x+y)p) when that is a positive integer >= y."""
    den = 4 * x * y - (x + y) * p
    if den <= 0:
        return None
    num = x * y * p
    if num % den:
        return None
    z = num // den
    return z if z >= y else None


@numba.njit(cache=True)
def _scan_kernel(p, xlo, xhi):  # pragma: no cover - compiled
    out = []
    for x in range(xlo, xhi + 1):
        k = 4 * x - p
        if k <= 0:
            continue
        xp = x * p
        ylo = xp // k + 1
        if ylo < x:
            ylo = x
        yhi = (2 * xp) // k
        den = k * ylo - xp
        for y in range(ylo, yhi + 1):
            num = xp * y
            if num % den == 0:
                z = num // den
                if z >= y:
                    out.append((x, y, z))
            den += k
    return out


def _fits_int64(p: int) -> bool:
    xr = elementary_x_range(p)
    x1 = p // 4 + 1  # smallest x with 4x > p maximizes the y range
    ymax = elementary_y_range(p, x1).hi
    return xr.hi * ymax * p < _INT64_MAX


def _scan_python(p: int) -> list[tuple[int, int, int]]:
    out = []
    for x in elementary_x_range(p):
        yr = elementary_y_range(p, x)
        for y in range(max(x, yr.lo), yr.hi + 1):
            z = z_candidate(p, x, y)
            if z is not None:
                out.append((x, y, z))
    return out


def enumerate_all(p: int) -> list[Solution]:
    """Every solution for prime p, ordered by (x, y)."""
    check_search_magnitude(p)
    require_prime(p)
    if _fits_int64(p):
        xr = elementary_x_range(p)
        triples = [tuple(map(int, t)) for t in _scan_kernel(p, xr.lo, xr.hi)]
    else:
        triples = _scan_python(p)
    sols = [make_solution(p, *t) for t in triples]
    assert len({s.triple() for s in sols}) == len(sols), "duplicate triple in oracle scan"
    return sols


def is_solution(p: int, x: int, y: int, z: int) -> bool:
    try:
        make_solution(p, x, y, z)
    except SolutionError:
        return False
    return True
