import math

import pytest
from hypothesis import given, settings, strategies as st

from weylcert import bounds as b


def test_binom_values():
    assert b.binom(9, 3) == 84
    assert b.binom(7, 0) == 1
    with pytest.raises(b.DomainError):
        b.binom(3, 5)


def test_multinomial():
    assert b.multinomial(10, 4, 4) == 3150
    assert b.multinomial(7, 3, 2) == 210
    with pytest.raises(b.DomainError):
        b.multinomial(5, 4, 3)


def test_bc_app_examples():
    assert b.check_bc_app_part1(16, 4)  # 1820^2 > 16^4
    assert b.check_bc_app_part2(10, 5, 5)  # equality branch a+b=m
    assert b.check_bc_app_part2(7, 3, 2)
    p1, p2 = b.check_bc_app(16, 4, 5, 5)
    assert p1 and p2
    with pytest.raises(b.HypothesisViolated):
        b.check_bc_app_part1(9, 4)
    with pytest.raises(b.HypothesisViolated):
        b.check_bc_app_part1(1, 1)  # degenerate boundary excluded
    with pytest.raises(b.HypothesisViolated):
        b.check_bc_app_part2(10, 2, 2)  # a+b too small


def test_bc_lower():
    assert b.check_bc_lower(2)   # 6 > 4
    assert b.check_bc_lower(4)   # 30 > 16
    assert b.check_bc_lower(63)
    with pytest.raises(b.DomainError):
        b.check_bc_lower(1)


def test_easy_bounds():
    assert b.easy_lower("A", 9, 3) == 120
    assert b.easy_lower("B", 10, 3) == 960
    assert b.easy_upper(28, 2) == 784
    with pytest.raises(b.PreconditionViolated):
        b.easy_lower("D", 8, 6)


def test_lowerbd1():
    assert b.lowerbd1(5, 4) == 15
    assert b.lowerbd1(9, 6) == 210
    with pytest.raises(b.PreconditionViolated):
        b.lowerbd1(5, 3)


def test_lowerbd2():
    assert b.lowerbd2(8, 1, True) == 128
    assert b.lowerbd2(8, 3, False) == 448
    assert b.lowerbd2(5, 2, False) == 10
    assert b.lowerbd2(9, 8, False) == 256  # e beyond the half-rank threshold
    with pytest.raises(b.PreconditionViolated):
        b.lowerbd2(2, 1, True)


def test_newupper():
    assert b.newupper(4, 2, 100) == 1600
    assert b.newupper(7, 3, 11811) == 4051173
    with pytest.raises(b.PreconditionViolated):
        b.newupper(2, 3, 10)


def test_nr_sandwich():
    assert b.nr_sandwich(1, 2, 10, 1000) == (100, 10000)
    lower, upper = b.nr_sandwich(3, 3, 624, 23436 * 624)
    assert lower == (3 * 624) ** 3 and upper == 27 * 23436 * 624 * 624
    assert b.nr_sandwich_contradicts(3, 100, 99)
    assert not b.nr_sandwich_contradicts(2, 10, 1000)


def test_q2_identity():
    r = 3
    assert b.q2_character_identity(4, 4 ** (3 + 2 * (2 * r - 4)))
    assert b.q2_character_identity(2, 2**7)
    with pytest.raises(b.DomainError):
        b.q2_character_identity(2, 2**5 * 3)
    with pytest.raises(b.DomainError):
        b.q2_character_identity(3, 3**7)


def test_propfinal():
    assert b.propfinal_check(8, 3)
    assert b.propfinal_check(4, 3)
    assert b.propfinal_check(4, 40)
    with pytest.raises(b.DomainError):
        b.propfinal_check(5, 3)
    with pytest.raises(b.DomainError):
        b.propfinal_check(2, 3)


def test_pow_gt_small():
    assert b.pow_gt(3, 4, 2, 6)         # 81 > 64
    assert not b.pow_gt(2, 6, 3, 4)
    assert not b.pow_gt(8, 10, 2, 30)   # equality is not >
    assert b.pow_gt(2, 10, 1, 99)
    assert not b.pow_gt(1, 99, 2, 1)


def test_pow_gt_huge_exponents():
    assert b.pow_gt(2, 10**80, 3, 10**6)
    assert not b.pow_gt(3, 10**6, 2, 10**80)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 40), st.integers(1, 25), st.integers(1, 40), st.integers(1, 25))
def test_pow_gt_matches_direct(b1, e1, b2, e2):
    assert b.pow_gt(b1, e1, b2, e2) == (b1**e1 > b2**e2)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 300), st.integers(0, 300))
def test_binom_pascal_recurrence(m, j):
    if j > m:
        return
    expected = 1
    if 0 < j:
        expected = math.comb(m - 1, j - 1) + (math.comb(m - 1, j) if j <= m - 1 else 0)
    assert b.binom(m, j) == expected


def test_pow_gt_equality_band():
    # near-tie exponent pairs exercise the direct-evaluation band
    for base, k in ((2, 3), (3, 2), (5, 4)):
        assert not b.pow_gt(base**k, 100, base, 100 * k)      # equality
        assert b.pow_gt(base**k, 101, base, 100 * k)
        assert not b.pow_gt(base, 100 * k, base**k, 100)
