"""Exact integer and rational primitives shared by the rest of the package.

Everything here is arbitrary precision; nothing constructs a float. The only
nontrivial piece is cmp_shifted_sqrt, which decides inequalities of the form
x < (1 + sqrt(m)) / 2 for rational x without ever computing a square root.
"""

import math
from fractions import Fraction

LESS = -1
EQUAL = 0
GREATER = 1

# Sieving beyond this is never needed here and would silently eat memory.
SIEVE_LIMIT = 10**7


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def v2(a: int) -> int:
    """2-adic valuation of a positive integer."""
    if a <= 0:
        raise ValueError("v2 requires a positive integer")
    return (a & -a).bit_length() - 1


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial requires a nonnegative integer")
    return math.factorial(n)


def odd_semifactorial(s: int) -> int:
    """(2s-1)!! = 1 * 3 * ... * (2s-1), with the empty product 1 at s=0."""
    if s < 0:
        raise ValueError("odd_semifactorial requires a nonnegative integer")
    return math.prod(range(1, 2 * s, 2))


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    if k > n:
        return 0
    return math.comb(n, k)


def cmp_shifted_sqrt(x: Fraction, m: int) -> int:
    """Compare x against (1 + sqrt(m)) / 2 exactly, for x >= 1/2 and m >= 0.

    Returns LESS, EQUAL or GREATER. Since 2x - 1 >= 0, the comparison is
    equivalent to comparing (2x - 1)^2 with m, which stays in the rationals.
    """
    t = 2 * x - 1
    if t < 0:
        raise ValueError("cmp_shifted_sqrt requires x >= 1/2")
    if m < 0:
        raise ValueError("cmp_shifted_sqrt requires m >= 0")
    lhs = t * t
    if lhs < m:
        return LESS
    if lhs == m:
        return EQUAL
    return GREATER


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, by a byte sieve. limit is capped at SIEVE_LIMIT."""
    if limit > SIEVE_LIMIT:
        raise ValueError(f"sieve limit capped at {SIEVE_LIMIT}")
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]
