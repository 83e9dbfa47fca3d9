from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import erdos_straus.reduction as red
from erdos_straus.arith import MagnitudeError, is_prime, primes_in
from erdos_straus.model import Bounds, NotPrimeError, SolutionType
from erdos_straus.oracle import enumerate_all
from erdos_straus.reduction import (
    NoSolutionFound,
    corollary1_x_bounds,
    hybrid_search,
    lemma1_x_bounds,
    lemma1_y_bounds,
    one_var_condition,
    one_var_y_region,
    search_one_var,
    search_two_var,
    special_3mod4,
    theorem1_residual,
    x_from_y,
    z_from_xy,
)
from erdos_straus.structure import classify

from conftest import fraction_check

PRIMES_1000 = list(primes_in(2, 1000))


@pytest.mark.parametrize("p,b", [(5, (2, 3)), (7, (2, 5)), (2, (1, 1))])
def test_lemma1_x_bounds(p, b):
    assert lemma1_x_bounds(p) == Bounds(*b)


def test_lemma1_y_bounds():
    assert lemma1_y_bounds(5, 2) == Bounds(4, 6)
    assert lemma1_y_bounds(7, 4) == Bounds(4, 6)
    with pytest.raises(ValueError):
        lemma1_y_bounds(7, 1)


@pytest.mark.parametrize("p,b", [(11, (3, 6)), (5, (2, 3)), (17, (5, 9))])
def test_corollary1_x_bounds(p, b):
    assert corollary1_x_bounds(p) == Bounds(*b)


@pytest.mark.parametrize("args,r", [((5, 2, 4), 0), ((5, 2, 5), 0), ((5, 2, 6), 4)])
def test_theorem1_residual(args, r):
    assert theorem1_residual(*args) == r


@pytest.mark.parametrize("args,z", [((5, 2, 4), 20), ((5, 2, 5), 10), ((7, 4, 4), 14)])
def test_z_from_xy(args, z):
    assert z_from_xy(*args) == z


def test_z_from_xy_rejects_non_pair():
    with pytest.raises(ValueError):
        z_from_xy(5, 2, 6)


@pytest.mark.parametrize("args,x", [((7, 4), 4), ((5, 4), 2), ((5, 5), 2)])
def test_x_from_y(args, x):
    assert x_from_y(*args) == x


def test_x_from_y_precondition():
    with pytest.raises(ValueError):
        x_from_y(7, 1)


def _region_by_fractions(p):
    # independent evaluation of the region formula with exact rationals
    q = -(-p // 4)
    hi = Fraction(2 * q * p, 4 * q - p)
    return Bounds(-(-p // 2), hi.numerator // hi.denominator)


@pytest.mark.parametrize("p,b", [(7, (4, 28)), (5, (3, 6)), (13, (7, 34)), (2, (1, 2))])
def test_one_var_y_region(p, b):
    assert one_var_y_region(p) == Bounds(*b) == _region_by_fractions(p)


def test_one_var_region_matches_fraction_evaluation():
    for p in PRIMES_1000:
        assert one_var_y_region(p) == _region_by_fractions(p)


@pytest.mark.parametrize("p,y,ok", [(7, 4, True), (5, 4, True), (7, 5, False), (5, 3, False)])
def test_one_var_condition(p, y, ok):
    assert one_var_condition(p, y) is ok


def test_one_var_condition_precondition():
    with pytest.raises(ValueError):
        one_var_condition(7, 1)


def test_search_two_var_examples():
    assert [s.triple() for s in search_two_var(5)] == [(2, 4, 20), (2, 5, 10)]
    assert [s.triple() for s in search_two_var(3)] == [(1, 4, 12), (1, 6, 6), (2, 2, 3)]
    got = {s.triple() for s in search_two_var(11)}
    assert {(3, 44, 132), (3, 66, 66), (4, 11, 44), (6, 6, 33)} <= got
    assert all(fraction_check(11, *t) for t in got)


def test_search_two_var_equals_oracle():
    for p in PRIMES_1000:
        assert search_two_var(p) == enumerate_all(p), p


def test_two_var_python_path_matches_kernel(monkeypatch):
    fast = {p: search_two_var(p) for p in PRIMES_1000[:60]}
    monkeypatch.setattr(red, "_two_var_fits_int64", lambda p: False)
    for p, sols in fast.items():
        assert search_two_var(p) == sols


def test_one_var_examples():
    assert search_one_var(7)[0].triple() == (4, 4, 14)
    assert search_one_var(5)[0].triple() == (2, 4, 20)
    assert search_one_var(2)[0].triple() == (1, 2, 2)


def test_one_var_numpy_path_matches_python():
    for p in PRIMES_1000[:80]:
        region = one_var_y_region(p)
        assert list(red._one_var_hits_numpy(p, region)) == list(red._one_var_hits_python(p, region)), p


def test_one_var_subset_and_type1_completeness():
    for p in PRIMES_1000:
        emitted = search_one_var(p, stop_at_first=False)
        ys = [s.y for s in emitted]
        assert ys == sorted(set(ys))
        oracle = enumerate_all(p)
        assert set(emitted) <= set(oracle)
        region = one_var_y_region(p)
        type1 = {s for s in oracle if classify(s) is SolutionType.TYPE_I and s.y in region}
        assert type1 <= set(emitted), p


@pytest.mark.parametrize("p,t", [(7, (4, 4, 14)), (3, (2, 2, 3))])
def test_special_3mod4(p, t):
    s = special_3mod4(p)
    assert s.triple() == t
    assert classify(s) is SolutionType.TYPE_I


def test_special_3mod4_residue():
    with pytest.raises(ValueError):
        special_3mod4(5)


def test_special_3mod4_all_small():
    for p in primes_in(3, 10**4):
        if p % 4 == 3:
            s = special_3mod4(p)
            assert s.x == s.y == -(-p // 2)
            assert classify(s) is SolutionType.TYPE_I


def test_hybrid_search():
    assert hybrid_search(7).triple() == (4, 4, 14)
    s = hybrid_search(193)
    assert fraction_check(193, *s.triple())
    with pytest.raises(NotPrimeError):
        hybrid_search(4)
    with pytest.raises(MagnitudeError):
        hybrid_search((1 << 30) + 3)


def test_hybrid_falls_back_and_reports(monkeypatch):
    monkeypatch.setattr(red, "search_one_var", lambda p, stop_at_first=True: [])
    assert red.hybrid_search(5).triple() == (2, 4, 20)
    monkeypatch.setattr(red, "search_two_var", lambda p: [])
    with pytest.raises(NoSolutionFound) as info:
        red.hybrid_search(5)
    assert info.value.p == 5


def test_large_prime_paths():
    # beyond the int64-safe threshold the exact Python loop takes over
    p = 1073741789  # largest prime below 2^30
    assert is_prime(p)
    s = hybrid_search(p)
    assert fraction_check(p, *s.triple())
    assert not red._one_var_fits_int64(p, one_var_y_region(p))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([p for p in primes_in(2, 10**4)]))
def test_upper_bound_decreasing_in_x(p):
    q = -(-p // 4)
    for x in range(q, p + 1):
        # 2xp/(4x-p) > 2(x+1)p/(4(x+1)-p), cross-multiplied
        assert 2 * x * p * (4 * (x + 1) - p) > 2 * (x + 1) * p * (4 * x - p)
