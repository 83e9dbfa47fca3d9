"""Dimension-reduced searches.

Two-variable search: scan (x, y) over the tight bounds
    ceil(p/4) <= x <= floor(3p/4),  ceil(xp/(4x-p)) <= y <= floor(2xp/(4x-p))
and keep pairs where 4xy - (x+y)p == gcd(y, p) * gcd(xy, x+y); then
z = xyp / (gcd(y, p) * gcd(xy, x+y)).

One-variable search: for y in [ceil(p/2), floor(2qp/(4q-p))] with q = ceil(p/4),
set x = ceil(yp/(4y-p)) and test the same gcd identity.
"""

from __future__ import annotations

from collections.abc import Iterator

import numba
import numpy as np

from .arith import ceil_div, check_search_magnitude, floor_div, gcd
from .model import Bounds, Solution, make_solution, require_prime

_INT64_MAX = np.iinfo(np.int64).max
_FIRST_CHUNK = 256
_MAX_CHUNK = 1 << 16


class NoSolutionFound(RuntimeError):
    """No decomposition was found for p. This would be a counterexample."""

    def __init__(self, p: int):
        super().__init__(f"no solution of 4/{p} = 1/x + 1/y + 1/z found")
        self.p = p


def lemma1_x_bounds(p: int) -> Bounds:
    return Bounds(ceil_div(p, 4), floor_div(3 * p, 4))


def lemma1_y_bounds(p: int, x: int) -> Bounds:
    k = 4 * x - p
    if k <= 0:
        raise ValueError(f"y bounds need 4x > p, got x={x}, p={p}")
    return Bounds(ceil_div(x * p, k), floor_div(2 * x * p, k))


def corollary1_x_bounds(p: int) -> Bounds:
    return Bounds(ceil_div(p, 4), ceil_div(p, 2))


def theorem1_residual(p: int, x: int, y: int) -> int:
    """(4xy - (x+y)p) - gcd(y,p)*gcd(xy, x+y); zero exactly when the identity holds."""
    return 4 * x * y - (x + y) * p - gcd(y, p) * gcd(x * y, x + y)


def z_from_xy(p: int, x: int, y: int) -> int:
    if theorem1_residual(p, x, y) != 0:
        raise ValueError(f"({x}, {y}) is not a solution pair for p={p}")
    return x * y * p // (gcd(y, p) * gcd(x * y, x + y))


def x_from_y(p: int, y: int) -> int:
    k = 4 * y - p
    if k <= 0:
        raise ValueError(f"x_from_y needs 4y > p, got y={y}, p={p}")
    return ceil_div(y * p, k)


def one_var_y_region(p: int) -> Bounds:
    if p < 2:
        raise ValueError(f"region needs p >= 2, got {p}")
    q = ceil_div(p, 4)
    return Bounds(ceil_div(p, 2), floor_div(2 * q * p, 4 * q - p))


def one_var_condition(p: int, y: int) -> bool:
    x = x_from_y(p, y)
    return (4 * y - p) * x - y * p == gcd(y, p) * gcd(y * x, y + x)


# -- two-variable search ----------------------------------------------------


@numba.njit(cache=True)
def _gcd64(a, b):  # pragma: no cover - compiled
    while b:
        a, b = b, a % b
    return a


@numba.njit(cache=True)
def _two_var_kernel(p, xlo, xhi):  # pragma: no cover - compiled
    out = []
    for x in range(xlo, xhi + 1):
        k = 4 * x - p
        xp = x * p
        ylo = (xp + k - 1) // k
        if ylo < x:
            ylo = x
        yhi = (2 * xp) // k
        lhs = k * ylo - xp
        for y in range(ylo, yhi + 1):
            # gcd(y,p)*gcd(xy,x+y) divides xyp, so this filter cannot drop a zero residual
            if lhs > 0 and (xp * y) % lhs == 0:
                g = _gcd64(y, p) * _gcd64(x * y, x + y)
                if lhs == g:
                    out.append((x, y, xp * y // g))
            lhs += k
    return out


def _two_var_fits_int64(p: int) -> bool:
    xb = lemma1_x_bounds(p)
    ymax = lemma1_y_bounds(p, xb.lo).hi
    return xb.hi * ymax * p < _INT64_MAX


def _two_var_python(p: int) -> list[tuple[int, int, int]]:
    out = []
    for x in lemma1_x_bounds(p):
        yb = lemma1_y_bounds(p, x)
        for y in range(max(x, yb.lo), yb.hi + 1):
            if theorem1_residual(p, x, y) == 0:
                out.append((x, y, z_from_xy(p, x, y)))
    return out


def search_two_var(p: int) -> list[Solution]:
    """All solutions found by the two-variable reduction, ordered by (x, y)."""
    check_search_magnitude(p)
    require_prime(p)
    if _two_var_fits_int64(p):
        xb = lemma1_x_bounds(p)
        triples = [tuple(map(int, t)) for t in _two_var_kernel(p, xb.lo, xb.hi)]
    else:
        triples = _two_var_python(p)
    return [make_solution(p, *t) for t in triples]


# -- one-variable search ----------------------------------------------------


def _one_var_fits_int64(p: int, region: Bounds) -> bool:
    # x <= ceil(p/2) across the region, so every product is at most 4*hi*(p+2)
    return 4 * region.hi * (p + 2) < _INT64_MAX


def _one_var_hits_numpy(p: int, region: Bounds) -> Iterator[int]:
    y0 = region.lo
    chunk = _FIRST_CHUNK
    while y0 <= region.hi:
        y = np.arange(y0, min(region.hi, y0 + chunk - 1) + 1, dtype=np.int64)
        k = 4 * y - p
        x = -((-y * p) // k)
        lhs = k * x - y * p
        gy = np.where(y % p == 0, p, 1)
        # gcd(xy, x+y) divides x+y: a necessary condition, one modulo instead of two gcds
        q = lhs // gy
        maybe = (lhs > 0) & (lhs % gy == 0)
        maybe &= (x + y) % np.where(maybe, q, 1) == 0
        for i in np.flatnonzero(maybe):
            if one_var_condition(p, int(y[i])):
                yield int(y[i])
        y0 += y.size
        chunk = min(2 * chunk, _MAX_CHUNK)


def _one_var_hits_python(p: int, region: Bounds) -> Iterator[int]:
    for y in region:
        if one_var_condition(p, y):
            yield y


def search_one_var(p: int, stop_at_first: bool = True) -> list[Solution]:
    """Solutions from the one-variable reduction, ordered by ascending y."""
    check_search_magnitude(p)
    require_prime(p)
    region = one_var_y_region(p)
    if _one_var_fits_int64(p, region):
        hits = _one_var_hits_numpy(p, region)
    else:
        hits = _one_var_hits_python(p, region)
    out = []
    for y in hits:
        x = x_from_y(p, y)
        z = z_from_xy(p, x, y)
        if z < y:
            # y is really the largest member of the ordered triple (x, z, y)
            continue
        out.append(make_solution(p, x, y, z))
        if stop_at_first:
            break
    return out


def special_3mod4(p: int) -> Solution:
    """The x = y = (p+1)/2, z = p(p+1)/4 solution available when p = 3 mod 4."""
    require_prime(p)
    if p % 4 != 3:
        raise ValueError(f"special construction needs p = 3 (mod 4), got p={p}")
    h = (p + 1) // 2
    return make_solution(p, h, h, p * (p + 1) // 4)


def hybrid_search(p: int) -> Solution:
    """First one-variable hit, else the first two-variable solution."""
    check_search_magnitude(p)
    require_prime(p)
    found = search_one_var(p, stop_at_first=True)
    if not found:
        found = search_two_var(p)
    if not found:
        raise NoSolutionFound(p)
    return found[0]

