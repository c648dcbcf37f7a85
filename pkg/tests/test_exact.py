import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqlab.exact import (
    EQUAL,
    GREATER,
    LESS,
    SIEVE_LIMIT,
    binomial,
    cmp_shifted_sqrt,
    factorial,
    gcd,
    odd_semifactorial,
    primes_upto,
    v2,
)


def test_ordering_constants():
    assert (LESS, EQUAL, GREATER) == (-1, 0, 1)


def test_gcd_basics():
    assert gcd(12, 18) == 6
    assert gcd(0, 5) == 5
    assert gcd(7, 0) == 7
    assert gcd(1, 1) == 1


@pytest.mark.parametrize("a,b", [(-1, 2), (2, -1), (0, 0)])
def test_gcd_rejects_bad_input(a, b):
    with pytest.raises(ValueError):
        gcd(a, b)


@given(st.integers(0, 10**12), st.integers(1, 10**12))
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    assert b % g == 0
    assert a % g == 0
    assert g == math.gcd(a, b)


def test_v2_small():
    assert [v2(k) for k in (1, 2, 3, 4, 12, 96)] == [0, 1, 0, 2, 2, 5]
    assert v2(2**50) == 50


@pytest.mark.parametrize("bad", [0, -4])
def test_v2_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        v2(bad)


@given(st.integers(0, 200), st.integers(0, 10**6).map(lambda k: 2 * k + 1))
def test_v2_reads_off_the_power(k, odd):
    assert v2(odd << k) == k


def test_factorial():
    assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]
    with pytest.raises(ValueError):
        factorial(-1)


def test_odd_semifactorial():
    assert [odd_semifactorial(s) for s in range(6)] == [1, 1, 3, 15, 105, 945]
    with pytest.raises(ValueError):
        odd_semifactorial(-1)


@given(st.integers(0, 60))
def test_odd_semifactorial_vs_factorials(s):
    # (2s)! = 2^s * s! * (2s-1)!!
    assert factorial(2 * s) == 2**s * factorial(s) * odd_semifactorial(s)


def test_binomial():
    assert [binomial(5, k) for k in range(6)] == [1, 5, 10, 10, 5, 1]
    assert binomial(3, 7) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -2)


@given(st.integers(0, 80), st.integers(0, 80))
def test_binomial_pascal(n, k):
    assert binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1)


def test_cmp_shifted_sqrt_strict_sides():
    x = Fraction(5, 2)  # (2x-1)^2 = 16
    assert cmp_shifted_sqrt(x, 13) == GREATER
    assert cmp_shifted_sqrt(x, 17) == LESS
    assert cmp_shifted_sqrt(x, 16) == EQUAL


def test_cmp_shifted_sqrt_equalities():
    assert cmp_shifted_sqrt(Fraction(1), 1) == EQUAL
    assert cmp_shifted_sqrt(Fraction(2), 9) == EQUAL
    assert cmp_shifted_sqrt(Fraction(1, 2), 0) == EQUAL


def test_cmp_shifted_sqrt_domain():
    with pytest.raises(ValueError):
        cmp_shifted_sqrt(Fraction(1, 4), 5)
    with pytest.raises(ValueError):
        cmp_shifted_sqrt(Fraction(3), -1)


@given(st.fractions(min_value=Fraction(1, 2), max_value=1000, max_denominator=1000),
       st.integers(0, 5000))
def test_cmp_shifted_sqrt_matches_floats_when_safe(x, m):
    # Far from ties the float comparison agrees with the exact one.
    lhs = float(2 * x - 1) ** 2
    if abs(lhs - m) > 1e-6:
        expected = LESS if lhs < m else GREATER
        assert cmp_shifted_sqrt(x, m) == expected


def test_primes_upto():
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(1) == []
    assert primes_upto(2) == [2]
    assert len(primes_upto(97)) == 25


def test_primes_upto_cap():
    with pytest.raises(ValueError):
        primes_upto(SIEVE_LIMIT + 1)
