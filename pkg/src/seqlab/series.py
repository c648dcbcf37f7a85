"""Truncated formal power series over exact rationals.

A series of order K stores coefficients c_0..c_K of x^0..x^K; every operation
is exact and truncates at the smaller operand order where relevant. This is
enough to state and verify identities about the exponential generating
function F(x) = sum a_n x^n / n! = exp(x + x^2/2):

    F'(x) = (1 + x) F(x)
    F''(x) = (x + 1) F'(x) + F(x)
    F(x) F(-x) = exp(x^2)

and the even-index convolution they imply,

    sum_{m+r=2n} (-1)^r C(2n, m) a_m a_r = (2n)! / n! = 2^n (2n-1)!!.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .exact import factorial, odd_semifactorial


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]


def series(values: Sequence) -> TruncatedSeries:
    """Build a series from any sequence of ints/Fractions, c_0 first."""
    if len(values) == 0:
        raise ValueError("a series needs at least the constant coefficient")
    return TruncatedSeries(tuple(Fraction(v) for v in values))


def _require_same_order(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} != {g.order}")


def ps_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _require_same_order(f, g)
    return TruncatedSeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def ps_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order.

    Scaling both factors to integers by their coefficient lcm keeps the inner
    convolution in int arithmetic; each output coefficient reduces once. This
    is dramatically faster than summing Fractions at order ~600.
    """
    _require_same_order(f, g)
    k = f.order
    lf = lcm(*(c.denominator for c in f.coeffs))
    lg = lcm(*(c.denominator for c in g.coeffs))
    fi = [c.numerator * (lf // c.denominator) for c in f.coeffs]
    gi = [c.numerator * (lg // c.denominator) for c in g.coeffs]
    scale = lf * lg
    out = []
    for n in range(k + 1):
        s = sum(fi[j] * gi[n - j] for j in range(n + 1))
        out.append(Fraction(s, scale))
    return TruncatedSeries(tuple(out))


def ps_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the order drops by one."""
    if f.order < 1:
        raise ValueError("cannot differentiate an order-0 series")
    return TruncatedSeries(tuple(j * f.coeffs[j] for j in range(1, f.order + 1)))


def ps_exp(g: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, to the same order.

    From E' = g' E: (n+1) E_{n+1} = sum_j j g_j E_{n+1-j}. Iterating only the
    nonzero terms of g matters when g is sparse (here g = x + x^2/2).
    """
    if g.coeffs[0] != 0:
        raise ValueError("ps_exp requires zero constant term")
    weighted = [(j, j * gj) for j, gj in enumerate(g.coeffs) if j > 0 and gj != 0]
    out = [Fraction(1)]
    for n in range(g.order):
        s = Fraction(0)
        for j, wj in weighted:
            if j > n + 1:
                break
            s += wj * out[n + 1 - j]
        out.append(s / (n + 1))
    return TruncatedSeries(tuple(out))


def ps_subst_neg(f: TruncatedSeries) -> TruncatedSeries:
    """f(-x): negate the odd-index coefficients."""
    return TruncatedSeries(
        tuple(-c if j & 1 else c for j, c in enumerate(f.coeffs))
    )


def ps_truncate(f: TruncatedSeries, order: int) -> TruncatedSeries:
    if order < 0 or order > f.order:
        raise ValueError("truncation order out of range")
    return TruncatedSeries(f.coeffs[: order + 1])


def egf_F(order: int, a_values: Optional[Sequence[int]] = None) -> TruncatedSeries:
    """The generating function sum a_n x^n / n!, truncated at the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if a_values is None:
        from .sequences import a_seq

        a_values = a_seq(order)
    if len(a_values) < order + 1:
        raise ValueError("not enough companion values for the requested order")
    out = []
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        out.append(Fraction(a_values[n], fact))
    return TruncatedSeries(tuple(out))


def convolution_lhs(n: int, a_values: Sequence[int]) -> int:
    """sum_{m+r=2n} (-1)^r C(2n, m) a_m a_r, which should equal 2^n (2n-1)!!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(a_values) < 2 * n + 1:
        raise ValueError("need a_0..a_{2n}")
    total = 0
    c = 1  # running C(2n, m)
    for m in range(2 * n + 1):
        r = 2 * n - m
        term = c * a_values[m] * a_values[r]
        total += -term if r & 1 else term
        c = c * (2 * n - m) // (m + 1)
    return total


def expected_convolution(n: int) -> int:
    """(2n)! / n! = 2^n (2n-1)!!, the closed form for the convolution."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (1 << n) * odd_semifactorial(n)


def series_identity_parts(order: int, a_values: Optional[Sequence[int]] = None) -> dict[str, Optional[int]]:
    """Check each generating-function identity to the given order.

    Returns a dict mapping the identity name to None when it holds or to the
    first offending coefficient/convolution index when it does not:

      exp_closed_form   coefficients of F match exp(x + x^2/2)
      second_order_ode  F'' = (x + 1) F' + F   (checked to order - 2)
      product_exp_x2    F(x) F(-x) = exp(x^2)
      convolution       the alternating even-index convolution, 1 <= n <= order//2
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    if a_values is None:
        from .sequences import a_seq

        a_values = a_seq(order)
    f = egf_F(order, a_values)
    parts: dict[str, Optional[int]] = {}

    g = series([0, 1, Fraction(1, 2)] + [0] * (order - 2))
    closed = ps_exp(g)
    parts["exp_closed_form"] = next(
        (j for j in range(order + 1) if f.coeffs[j] != closed.coeffs[j]), None
    )

    f1 = ps_derivative(f)
    f2 = ps_derivative(f1)
    # (x + 1) F' + F, truncated to order - 2 where F'' lives.
    rhs = [
        f1.coeffs[j] + (f1.coeffs[j - 1] if j else 0) + f.coeffs[j]
        for j in range(order - 1)
    ]
    parts["second_order_ode"] = next(
        (j for j in range(order - 1) if f2.coeffs[j] != rhs[j]), None
    )

    prod = ps_mul(f, ps_subst_neg(f))
    ex2 = []
    fact = 1
    for j in range(order + 1):
        if j % 2 == 0:
            if j:
                fact *= j // 2
            ex2.append(Fraction(1, fact))
        else:
            ex2.append(Fraction(0))
    parts["product_exp_x2"] = next(
        (j for j in range(order + 1) if prod.coeffs[j] != ex2[j]), None
    )

    parts["convolution"] = next(
        (
            n
            for n in range(1, order // 2 + 1)
            if convolution_lhs(n, a_values) != expected_convolution(n)
        ),
        None,
    )
    return parts
