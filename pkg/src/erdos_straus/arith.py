"""Exact integer helpers and primality utilities.

Python integers are arbitrary precision, so nothing here can wrap around.
The hard limits below are contract limits, enforced with MagnitudeError.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

import numpy as np

#: Searches and scans accept primes strictly below this.
MAX_SEARCH_P = 1 << 30
#: Deterministic primality is only claimed below this.
MAX_PRIMALITY_N = 1 << 64

# First twelve primes as Miller-Rabin witnesses: deterministic for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SEGMENT = 1 << 18


class MagnitudeError(ValueError):
    """An input is outside the range this library guarantees exact results for."""


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def ceil_div(n: int, d: int) -> int:
    if d == 0:
        raise ZeroDivisionError("ceil_div by zero")
    return -((-n) // d)


def floor_div(n: int, d: int) -> int:
    if d == 0:
        raise ZeroDivisionError("floor_div by zero")
    return n // d


def check_search_magnitude(p: int) -> None:
    if p >= MAX_SEARCH_P:
        raise MagnitudeError(f"p={p} exceeds the supported search range (p < 2^30)")


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2^64."""
    if n >= MAX_PRIMALITY_N:
        raise MagnitudeError(f"is_prime supports n < 2^64, got {n}")
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return np.flatnonzero(sieve).astype(np.int64)


def primes_in(lo: int, hi: int) -> Iterator[int]:
    """Yield every prime in [lo, hi] in ascending order (segmented sieve)."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    lo = max(lo, 2)
    if hi < lo:
        return
    base = _base_primes(math.isqrt(hi))
    start = lo
    while start <= hi:
        stop = min(start + _SEGMENT - 1, hi)
        mask = np.ones(stop - start + 1, dtype=bool)
        for q in base:
            q = int(q)
            if q * q > stop:
                break
            first = max(q * q, ceil_div(start, q) * q)
            mask[first - start :: q] = False
        for off in np.flatnonzero(mask):
            yield start + int(off)
        start = stop + 1
