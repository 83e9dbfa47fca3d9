import numba
import pytest

from erdos_straus.arith import MagnitudeError, ceil_div, floor_div
from erdos_straus.model import Bounds, NotPrimeError
from erdos_straus.oracle import (
    elementary_x_range,
    elementary_y_range,
    enumerate_all,
    is_solution,
    z_candidate,
)

from conftest import fraction_check


@numba.njit(cache=True)
def _naive_triple_loop(p):
    # x in [1, p], y in [x, p^2], z by divisibility; no bounds beyond these
    out = []
    for x in range(1, p + 1):
        for y in range(x, p * p + 1):
            den = 4 * x * y - (x + y) * p
            if den > 0:
                num = x * y * p
                if num % den == 0 and num // den >= y:
                    out.append((x, y, num // den))
    return out


@pytest.mark.parametrize("p,lo,hi", [(5, 1, 4), (2, 1, 2), (13, 3, 10)])
def test_elementary_x_range(p, lo, hi):
    assert elementary_x_range(p) == Bounds(lo, hi)


def test_elementary_y_range():
    assert elementary_y_range(5, 2) == Bounds(4, 6)
    assert elementary_y_range(5, 1).empty
    assert elementary_y_range(7, 4) == Bounds(4, 6)


@pytest.mark.parametrize("p,x,y,z", [(5, 2, 4, 20), (5, 2, 6, None), (3, 1, 3, None)])
def test_z_candidate(p, x, y, z):
    assert z_candidate(p, x, y) == z


@pytest.mark.parametrize(
    "p,expected",
    [
        (5, [(2, 4, 20), (2, 5, 10)]),
        (2, [(1, 2, 2)]),
        (3, [(1, 4, 12), (1, 6, 6), (2, 2, 3)]),
        (7, [(2, 15, 210), (2, 16, 112), (2, 18, 63), (2, 21, 42), (2, 28, 28), (3, 6, 14), (4, 4, 14)]),
    ],
)
def test_enumerate_all_small(p, expected):
    got = [s.triple() for s in enumerate_all(p)]
    assert got == expected
    assert all(fraction_check(p, *t) for t in got)


def test_enumerate_all_rejects():
    with pytest.raises(NotPrimeError):
        enumerate_all(9)
    with pytest.raises(MagnitudeError):
        enumerate_all((1 << 30) + 3)


@pytest.mark.parametrize(
    "args,expected", [((7, 4, 4, 14), True), ((7, 4, 4, 15), False), ((7, 14, 4, 4), False), ((9, 3, 6, 18), False)]
)
def test_is_solution(args, expected):
    assert is_solution(*args) is expected


def test_oracle_of_the_oracle(small_primes):
    for p in small_primes:
        naive = [tuple(map(int, t)) for t in _naive_triple_loop(p)]
        assert [s.triple() for s in enumerate_all(p)] == naive, p


def test_python_fallback_matches_kernel(small_primes, monkeypatch):
    import erdos_straus.oracle as oracle

    fast = {p: enumerate_all(p) for p in small_primes[:40]}
    monkeypatch.setattr(oracle, "_fits_int64", lambda p: False)
    for p, sols in fast.items():
        assert enumerate_all(p) == sols


def test_every_solution_inside_tight_bounds(small_primes):
    # the oracle never assumes these, so each one is a genuine check
    for p in small_primes:
        for s in enumerate_all(p):
            x, y = s.x, s.y
            assert ceil_div(p, 4) <= x <= floor_div(3 * p, 4)
            k = 4 * x - p
            assert ceil_div(x * p, k) <= y <= floor_div(2 * x * p, k)
            assert 2 * y > p
            assert 2 * y <= p * (p + 1)


def test_output_is_deterministic_and_ordered(small_primes):
    for p in small_primes[-5:]:
        a, b = enumerate_all(p), enumerate_all(p)
        assert a == b
        keys = [(s.x, s.y) for s in a]
        assert keys == sorted(set(keys))
