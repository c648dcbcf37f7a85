"""The integer companion sequence a_n and everything derived from it.

a_0 = a_1 = 1 and a_{n+2} = a_{n+1} + (n+1) a_n. The rational sequence of
interest satisfies x_{n+1} = 1 + n / x_n with x_0 = 1, and x_n = a_n / a_{n-1}
for n >= 1. Per index we carry:

    d_n = gcd(a_n, a_{n-1})        (n >= 1)
    e_n = v2(a_n)
    q_n = a_n / 2^{e_n}            (the odd part)
    D_n = denominator of x_n in lowest terms, so D_n * d_n = a_{n-1}.

Closed forms: writing n = 4k + r with r in {0,1,2,3},
e_n is k, k, k+1, k+2 and d_n is 2^k, 2^k, 2^k, 2^{k+1} respectively.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterable, Iterator, Optional, Sequence

from .exact import binomial, gcd, odd_semifactorial, v2


@dataclass(frozen=True)
class SeqRow:
    """One fully derived index of the table."""

    n: int
    a: int
    x: Fraction
    d: int
    e: int
    q: int
    D: int


def a_iter() -> Iterator[int]:
    """Infinite stream a_0, a_1, a_2, ..."""
    prev, cur = 1, 1
    yield prev
    yield cur
    n = 0
    while True:
        prev, cur = cur, cur + (n + 1) * prev
        n += 1
        yield cur


def a_seq(max_n: int) -> list[int]:
    """[a_0, ..., a_max_n]."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    return list(islice(a_iter(), max_n + 1))


def x_seq(max_n: int) -> list[Fraction]:
    """[x_0, ..., x_max_n], computed directly from the rational recurrence.

    Deliberately independent of a_seq so the two can cross-check each other.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    xs = [Fraction(1)]
    x = Fraction(1)
    for n in range(max_n):
        x = 1 + Fraction(n, 1) / x
        xs.append(x)
    return xs


def a_closed(n: int) -> int:
    """a_n as the sum over s of C(n, 2s) * (2s-1)!!.

    Counts choices of 2s elements times a perfect matching on them, which is
    an independent route to the same numbers as the recurrence.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(binomial(n, 2 * s) * odd_semifactorial(s) for s in range(n // 2 + 1))


def a_mod(max_n: int, m: int) -> list[int]:
    """[a_0 mod m, ..., a_max_n mod m] via the recurrence carried mod m."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    out = [1 % m]
    if max_n == 0:
        return out
    prev, cur = 1 % m, 1 % m
    out.append(cur)
    for n in range(max_n - 1):
        prev, cur = cur, (cur + (n + 1) * prev) % m
        out.append(cur)
    return out


def d(n: int, a_values: Optional[Sequence[int]] = None) -> int:
    """d_n = gcd(a_n, a_{n-1}) for n >= 1."""
    if n < 1:
        raise ValueError("d is defined for n >= 1")
    if a_values is None:
        a_values = a_seq(n)
    return gcd(a_values[n], a_values[n - 1])


def e_closed(n: int) -> int:
    """Closed form for v2(a_n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k, r = divmod(n, 4)
    return k + (0, 0, 1, 2)[r]


def d_closed(n: int) -> int:
    """Closed form for gcd(a_n, a_{n-1}), a pure power of two."""
    if n < 1:
        raise ValueError("d is defined for n >= 1")
    k, r = divmod(n, 4)
    return 1 << (k + (0, 0, 0, 1)[r])


@dataclass(frozen=True)
class MoebiusMatrix:
    """Integer 2x2 matrix acting on rationals by (alpha*x + beta)/(gamma*x + delta)."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    @staticmethod
    def identity() -> "MoebiusMatrix":
        return MoebiusMatrix(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.alpha * self.delta - self.beta * self.gamma

    def __matmul__(self, other: "MoebiusMatrix") -> "MoebiusMatrix":
        return MoebiusMatrix(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )


def moebius(n: int, k: int) -> MoebiusMatrix:
    """The matrix carrying x_n to x_{n+k}: a product of the one-step maps.

    One step from index n + j is x -> 1 + (n+j)/x, i.e. [[1, n+j], [1, 0]].
    Steps compose by left multiplication, so det is (-1)^k * prod(n+j).
    """
    if n < 0 or k < 0:
        raise ValueError("moebius requires nonnegative n and k")
    m = MoebiusMatrix.identity()
    for j in range(k):
        m = MoebiusMatrix(1, n + j, 1, 0) @ m
    return m


def moebius_apply(m: MoebiusMatrix, x: Fraction) -> Fraction:
    den = m.gamma * x + m.delta
    if den == 0:
        raise ZeroDivisionError("moebius map has a pole at this point")
    return (m.alpha * x + m.beta) / den


def a6_step(n: int, a_nm2: int, a_np2: int) -> int:
    """a_{n+6} from a_{n-2} and a_{n+2}, for n >= 2.

    a_{n+6} = 2 (n^2 + 9n + 19) a_{n+2} - n (n-1) (n+2) (n+5) a_{n-2}.
    """
    if n < 2:
        raise ValueError("a6_step requires n >= 2")
    return 2 * (n * n + 9 * n + 19) * a_np2 - n * (n - 1) * (n + 2) * (n + 5) * a_nm2


def q_step(n: int, q_nm2: int, q_np2: int) -> int:
    """q_{n+6} from q_{n-2} and q_{n+2}, for n >= 2.

    The odd parts satisfy the same shape of recurrence with the factor of 2
    absorbed: q_{n+6} = (n^2 + 9n + 19) q_{n+2} - (n (n-1) (n+2) (n+5) / 4) q_{n-2}.
    The product of four consecutive-ish factors is always divisible by 4.
    """
    if n < 2:
        raise ValueError("q_step requires n >= 2")
    coef = n * (n - 1) * (n + 2) * (n + 5)
    if coef % 4:
        raise ArithmeticError("coefficient not divisible by 4")
    return (n * n + 9 * n + 19) * q_np2 - (coef // 4) * q_nm2


def rows_from_a(a_values: Sequence[int]) -> list[SeqRow]:
    """Derive the full table from a prefix [a_0, ..., a_N] of the sequence.

    Row n >= 1 uses x_n = a_n / a_{n-1}; the reduced denominator D_n divides
    a_{n-1} exactly, and d_n = a_{n-1} / D_n. Row 0 takes x_0 = 1 and the
    sentinel d_0 = 1 so the table is rectangular.
    """
    rows: list[SeqRow] = []
    for n, a in enumerate(a_values):
        if n == 0:
            x = Fraction(a)
            dn = 1
        else:
            x = Fraction(a, a_values[n - 1])
            dn = a_values[n - 1] // x.denominator
        e = v2(a)
        rows.append(SeqRow(n=n, a=a, x=x, d=dn, e=e, q=a >> e, D=x.denominator))
    return rows


def iter_rows(max_n: int) -> Iterator[SeqRow]:
    yield from rows_from_a(a_seq(max_n))


def table(max_n: int) -> list[SeqRow]:
    """Rows 0..max_n of the derived table."""
    return rows_from_a(a_seq(max_n))


def integer_indices(rows: Iterable[SeqRow]) -> list[int]:
    """Indices n in the given rows at which x_n is an integer."""
    return [row.n for row in rows if row.D == 1]
