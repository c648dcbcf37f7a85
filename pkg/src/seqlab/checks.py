"""Mechanical verification sweeps over the sequence table.

Each check scans an index range with exact arithmetic and returns a
CheckResult; a counterexample is an (n, detail) pair. run_all wires the
checks to a VerifyConfig, shares one computed table across them, and is what
the command line drives. Checks accept precomputed a_values/rows so callers
can feed deliberately corrupted data and confirm the sweeps catch it.
"""

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .exact import GREATER, LESS, cmp_shifted_sqrt, gcd, primes_upto
from .involutions import check_involution_identity
from .report import FAIL, PASS, CheckResult, VerifyConfig
from .sequences import (
    SeqRow,
    a_mod,
    a_seq,
    a6_step,
    d_closed,
    e_closed,
    integer_indices,
    q_step,
    rows_from_a,
)
from .series import series_identity_parts

# A failing sweep reports at most this many witnesses; more adds no signal.
MAX_COUNTEREXAMPLES = 25

# The divisibility mechanism behind the gcd upper bound needs a_0..a_{2n},
# so it is capped independently of the main range.
DEFAULT_MECHANISM_HI = 600


def _finish(name: str, lo: int, hi: int, cex: list, start: float) -> CheckResult:
    return CheckResult(
        name=name,
        lo=lo,
        hi=hi,
        status=PASS if not cex else FAIL,
        counterexamples=cex,
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )


def _rows(hi: int, rows: Optional[Sequence[SeqRow]]) -> Sequence[SeqRow]:
    if rows is None:
        rows = rows_from_a(a_seq(hi))
    if len(rows) < hi + 1:
        raise ValueError("rows do not cover the requested range")
    return rows


def check_x_bounds(lo: int, hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """(1 + sqrt(4n-3))/2 < x_n < (1 + sqrt(4n+1))/2, strictly, for n >= 4."""
    start = time.monotonic()
    if lo < 4:
        raise ValueError("the strict bounds start at n = 4")
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    for n in range(lo, hi + 1):
        x = rows[n].x
        if cmp_shifted_sqrt(x, 4 * n - 3) is not GREATER:
            cex.append((n, f"x({n}) = {x} is not above (1+sqrt({4*n-3}))/2"))
        elif cmp_shifted_sqrt(x, 4 * n + 1) is not LESS:
            cex.append((n, f"x({n}) = {x} is not below (1+sqrt({4*n+1}))/2"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            break
    return _finish("x_bounds", lo, hi, cex, start)


def check_mod4_exclusion(lo: int, hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """No integer value of x_n is possible for n >= 4, and none occurs.

    If x_n were an integer, (2 x_n - 1)^2 would be an odd square strictly
    between 4n - 3 and 4n + 1, i.e. one of 4n - 2, 4n - 1, 4n; odd squares
    are 1 mod 4 and those three are 2, 3, 0 mod 4. The sweep confirms both
    the residue exclusion and the fact that every denominator exceeds 1.
    """
    start = time.monotonic()
    if lo < 4:
        raise ValueError("the exclusion argument starts at n = 4")
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    for n in range(lo, hi + 1):
        residues = {(4 * n - 2) % 4, (4 * n - 1) % 4, (4 * n) % 4}
        if 1 in residues:
            cex.append((n, "an odd square residue slipped into the excluded window"))
        elif rows[n].D == 1:
            cex.append((n, f"x({n}) = {rows[n].x} is an integer"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            break
    return _finish("mod4_exclusion", lo, hi, cex, start)


def check_quadratic_gap(lo: int, hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """n - 1 < x_n^2 - x_n < n, strictly, for n >= 4."""
    start = time.monotonic()
    if lo < 4:
        raise ValueError("the strict gap starts at n = 4")
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    for n in range(lo, hi + 1):
        x = rows[n].x
        g = x * x - x
        if not (n - 1 < g < n):
            cex.append((n, f"x({n})^2 - x({n}) = {g} escapes ({n-1}, {n})"))
            if len(cex) >= MAX_COUNTEREXAMPLES:
                break
    return _finish("quadratic_gap", lo, hi, cex, start)


def check_sqrt_factorial_lower(hi: int, a_values: Optional[Sequence[int]] = None) -> CheckResult:
    """a_n^2 >= n! for all n, with equality exactly at n = 0 and n = 1."""
    start = time.monotonic()
    if a_values is None:
        a_values = a_seq(hi)
    cex: list[tuple[int, str]] = []
    fact = 1
    for n in range(hi + 1):
        if n:
            fact *= n
        sq = a_values[n] * a_values[n]
        if sq < fact:
            cex.append((n, f"a({n})^2 = {sq} < {n}! "))
        elif sq == fact and n > 1:
            cex.append((n, f"unexpected equality a({n})^2 = {n}!"))
        elif sq > fact and n <= 1:
            cex.append((n, f"expected equality a({n})^2 = {n}! fails"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            break
    return _finish("sqrt_factorial", 0, hi, cex, start)


def check_congruence(
    prime_limit: int,
    n_limit: int,
    a_values: Optional[Sequence[int]] = None,
    cross_limit: int = 200,
) -> CheckResult:
    """a_n = 1 mod p whenever the odd prime p divides n.

    One modular sweep per prime covers the whole range cheaply; the same
    congruence is then recomputed from full-precision values for n up to
    cross_limit so the modular walk itself is not trusted blindly.
    """
    start = time.monotonic()
    cex: list[tuple[int, str]] = []
    odd_primes = [p for p in primes_upto(prime_limit) if p > 2]
    for p in odd_primes:
        residues = a_mod(n_limit, p)
        for n in range(p, n_limit + 1, p):
            if residues[n] != 1:
                cex.append((n, f"a({n}) = {residues[n]} mod {p}, expected 1"))
                if len(cex) >= MAX_COUNTEREXAMPLES:
                    return _finish("congruence", 3, n_limit, cex, start)
    if a_values is not None:
        hi_cross = min(cross_limit, n_limit, len(a_values) - 1)
        for p in odd_primes:
            for n in range(p, hi_cross + 1, p):
                if a_values[n] % p != 1:
                    cex.append((n, f"full-precision a({n}) is not 1 mod {p}"))
                    if len(cex) >= MAX_COUNTEREXAMPLES:
                        return _finish("congruence", 3, n_limit, cex, start)
    return _finish("congruence", 3, n_limit, cex, start)


def check_d_power_of_two(hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """gcd(a_n, a_{n-1}) is a power of two for every n >= 1."""
    start = time.monotonic()
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    for n in range(1, hi + 1):
        dn = rows[n].d
        if dn <= 0 or dn & (dn - 1):
            cex.append((n, f"d({n}) = {dn} is not a power of two"))
            if len(cex) >= MAX_COUNTEREXAMPLES:
                break
    return _finish("d_power_of_two", 1, hi, cex, start)


def check_d_upper(
    hi: int,
    rows: Optional[Sequence[SeqRow]] = None,
    a_values: Optional[Sequence[int]] = None,
    mechanism_hi: Optional[int] = None,
) -> CheckResult:
    """d_n <= 2^{n-1}, plus the divisibility that forces the bound.

    The alternating convolution sum_{m+r=2n} (-1)^r C(2n,m) a_m a_r equals
    2^n (2n-1)!!, and d_{n+1} divides it; since d_{n+1} is a power of two and
    (2n-1)!! is odd, d_{n+1} <= 2^n follows. The mechanism needs a_0..a_{2n},
    so it runs to mechanism_hi (default min(hi, 600)) while the plain bound
    runs over the full range.
    """
    from .series import convolution_lhs, expected_convolution

    start = time.monotonic()
    rows = _rows(hi, rows)
    if mechanism_hi is None:
        mechanism_hi = min(hi, DEFAULT_MECHANISM_HI)
    if a_values is None:
        a_values = a_seq(max(2 * mechanism_hi, mechanism_hi + 1))
    cex: list[tuple[int, str]] = []
    for n in range(1, hi + 1):
        if rows[n].d > 1 << (n - 1):
            cex.append((n, f"d({n}) = {rows[n].d} exceeds 2^{n-1}"))
            if len(cex) >= MAX_COUNTEREXAMPLES:
                return _finish("d_upper", 1, hi, cex, start)
    for n in range(1, mechanism_hi + 1):
        got = convolution_lhs(n, a_values)
        want = expected_convolution(n)
        if got != want:
            cex.append((n, f"alternating convolution at 2n = {2*n} is not (2n)!/n!"))
        elif want % gcd(a_values[n + 1], a_values[n]):
            cex.append((n, f"d({n+1}) does not divide the convolution value"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            break
    return _finish("d_upper", 1, hi, cex, start)


def check_e_q(hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """2-adic valuations, odd parts, and the odd-part recurrence.

    v2(a_n) must match the closed form (k, k, k+1, k+2 across n = 4k..4k+3),
    q_n = a_n / 2^{e_n} must be odd with the known first eight values
    1,1,1,1,5,13,19,29, and q_{n+6} = (n^2+9n+19) q_{n+2}
    - (n(n-1)(n+2)(n+5)/4) q_{n-2} must hold wherever it fits in range.
    """
    start = time.monotonic()
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    first_q = (1, 1, 1, 1, 5, 13, 19, 29)
    for n in range(hi + 1):
        row = rows[n]
        if row.e != e_closed(n):
            cex.append((n, f"v2(a({n})) = {row.e}, closed form gives {e_closed(n)}"))
        elif row.q % 2 == 0:
            cex.append((n, f"odd part of a({n}) came out even"))
        elif (row.q << row.e) != row.a:
            cex.append((n, f"q({n}) * 2^e({n}) does not rebuild a({n})"))
        elif n < 8 and row.q != first_q[n]:
            cex.append((n, f"q({n}) = {row.q}, expected {first_q[n]}"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            return _finish("e_q", 0, hi, cex, start)
    n = 2
    while n + 6 <= hi:
        want = q_step(n, rows[n - 2].q, rows[n + 2].q)
        if rows[n + 6].q != want:
            cex.append((n + 6, f"odd-part recurrence fails tying q({n-2}), q({n+2}), q({n+6})"))
            if len(cex) >= MAX_COUNTEREXAMPLES:
                break
        n += 1
    return _finish("e_q", 0, hi, cex, start)


def check_d_formula(hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """gcd(a_n, a_{n-1}) equals its closed form 2^k / 2^{k+1} by n mod 4."""
    start = time.monotonic()
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    for n in range(1, hi + 1):
        if rows[n].d != d_closed(n):
            cex.append((n, f"d({n}) = {rows[n].d}, closed form gives {d_closed(n)}"))
            if len(cex) >= MAX_COUNTEREXAMPLES:
                break
    return _finish("d_formula", 1, hi, cex, start)


def check_quarter_bound_and_D(hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """The gcd fourth-power bound and the reduced-denominator facts.

    For n >= 1: d_n^4 <= 2^{n+1} and D_n d_n = a_{n-1}. For n >= 4: D_n > 1,
    so no later value of x is an integer. For n >= 10: (n-1)! > 4^{n-1},
    which is what makes the fourth-power bound eventually crush d_n^4
    against a_{n-1}^2 >= (n-1)!; the inequality is genuinely false at n = 9.
    """
    start = time.monotonic()
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    fact = 1  # (n-1)!
    power = 1  # 4^{n-1}
    for n in range(1, hi + 1):
        if n > 1:
            fact *= n - 1
            power *= 4
        row = rows[n]
        d4 = row.d ** 4
        if d4 > 1 << (n + 1):
            cex.append((n, f"d({n})^4 = {d4} exceeds 2^{n+1}"))
        elif row.D * row.d != rows[n - 1].a:
            cex.append((n, f"D({n}) * d({n}) != a({n-1})"))
        elif n >= 4 and row.D <= 1:
            cex.append((n, f"x({n}) reduced denominator is {row.D}"))
        elif n >= 10 and fact <= power:
            cex.append((n, f"({n-1})! does not exceed 4^{n-1}"))
        elif n == 9 and fact >= power:
            cex.append((n, "the factorial bound should still fail at n = 9"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            break
    return _finish("quarter_bound", 1, hi, cex, start)


def check_parity(hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """Reduced numerator/denominator parities follow n mod 4 exactly.

    For n >= 1: D_n is even iff n = 0 mod 4, and the numerator of x_n is
    even iff n = 2 or 3 mod 4.
    """
    start = time.monotonic()
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    for n in range(1, hi + 1):
        row = rows[n]
        if (row.D % 2 == 0) != (n % 4 == 0):
            cex.append((n, f"denominator {row.D} has the wrong parity for n mod 4 = {n % 4}"))
        elif (row.x.numerator % 2 == 0) != (n % 4 in (2, 3)):
            cex.append((n, f"numerator {row.x.numerator} has the wrong parity for n mod 4 = {n % 4}"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            break
    return _finish("parity", 1, hi, cex, start)


def check_integrality(hi: int, rows: Optional[Sequence[SeqRow]] = None) -> CheckResult:
    """x_n is an integer exactly at n = 0, 1, 2, 3."""
    start = time.monotonic()
    rows = _rows(hi, rows)
    cex: list[tuple[int, str]] = []
    expected = [n for n in (0, 1, 2, 3) if n <= hi]
    got = integer_indices(rows[: hi + 1])
    for n in sorted(set(got) ^ set(expected)):
        if n in got:
            cex.append((n, f"x({n}) = {rows[n].x} is unexpectedly an integer"))
        else:
            cex.append((n, f"x({n}) = {rows[n].x} should be an integer"))
        if len(cex) >= MAX_COUNTEREXAMPLES:
            break
    return _finish("integrality", 0, hi, cex, start)


def check_a6_relation(hi: int, a_values: Optional[Sequence[int]] = None) -> CheckResult:
    """a_{n+6} = 2(n^2+9n+19) a_{n+2} - n(n-1)(n+2)(n+5) a_{n-2} for n >= 2."""
    start = time.monotonic()
    if a_values is None:
        a_values = a_seq(hi + 6)
    if len(a_values) < hi + 7:
        raise ValueError("need companion values through hi + 6")
    cex: list[tuple[int, str]] = []
    for n in range(2, hi + 1):
        if a_values[n + 6] != a6_step(n, a_values[n - 2], a_values[n + 2]):
            cex.append((n, f"six-step recurrence fails tying a({n-2}), a({n+2}), a({n+6})"))
            if len(cex) >= MAX_COUNTEREXAMPLES:
                break
    return _finish("a6_relation", 2, hi, cex, start)


def check_series_identities(order: int, a_values: Optional[Sequence[int]] = None) -> CheckResult:
    """All generating-function identities, coefficient by coefficient."""
    start = time.monotonic()
    parts = series_identity_parts(order, a_values)
    cex: list[tuple[int, str]] = []
    for part, idx in parts.items():
        if idx is not None:
            cex.append((idx, f"{part}: first discrepancy at index {idx}"))
    return _finish("series", 0, order, cex, start)


def check_sign_flip(seed: int = 0, samples: int = 1000) -> CheckResult:
    """(f^2 - f - n) x^2 = -n (x^2 - x - n) for f = 1 + n/x, sampled randomly.

    The step map sends the sign of x^2 - x - n to its opposite, which is the
    algebra behind the quadratic gap; sampling random rationals exercises it
    far outside the orbit of the actual sequence.
    """
    start = time.monotonic()
    rng = random.Random(seed)
    cex: list[tuple[int, str]] = []
    for i in range(1, samples + 1):
        x = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
        n = rng.randint(1, 10**6)
        f = 1 + Fraction(n, 1) / x
        lhs = (f * f - f - n) * x * x
        rhs = -n * (x * x - x - n)
        if lhs != rhs:
            cex.append((i, f"identity fails at sample {i}: x = {x}, n = {n}"))
            if len(cex) >= MAX_COUNTEREXAMPLES:
                break
    return _finish("sign_flip", 1, samples, cex, start)


def stirling_diagnostic(
    points: Sequence[int], a_values: Optional[Sequence[int]] = None
) -> list[tuple[int, float]]:
    """log(a_n^2 / n!) at chosen indices; diagnostic only, never asserted.

    Positive values restate the factorial lower bound in float terms and show
    the margin growing; floats stay out of every real check.
    """
    if a_values is None:
        a_values = a_seq(max(points, default=0))
    out = []
    for n in points:
        if n == 0:
            out.append((0, 0.0))
        else:
            out.append((n, 2 * math.log(a_values[n]) - math.lgamma(n + 1)))
    return out


_ROWS_CHECKS = {
    "x_bounds",
    "mod4_exclusion",
    "quadratic_gap",
    "d_power_of_two",
    "d_upper",
    "e_q",
    "d_formula",
    "quarter_bound",
    "parity",
    "integrality",
}

_REGISTRY: dict[str, Callable[[VerifyConfig, Sequence[int], Optional[Sequence[SeqRow]]], CheckResult]] = {
    "x_bounds": lambda c, a, r: check_x_bounds(4, c.max_n, r),
    "mod4_exclusion": lambda c, a, r: check_mod4_exclusion(4, c.max_n, r),
    "quadratic_gap": lambda c, a, r: check_quadratic_gap(4, c.max_n, r),
    "sqrt_factorial": lambda c, a, r: check_sqrt_factorial_lower(c.max_n, a),
    "congruence": lambda c, a, r: check_congruence(c.prime_limit, c.max_n, a),
    "d_power_of_two": lambda c, a, r: check_d_power_of_two(c.max_n, r),
    "d_upper": lambda c, a, r: check_d_upper(c.max_n, r, a),
    "e_q": lambda c, a, r: check_e_q(c.max_n, r),
    "d_formula": lambda c, a, r: check_d_formula(c.max_n, r),
    "quarter_bound": lambda c, a, r: check_quarter_bound_and_D(c.max_n, r),
    "parity": lambda c, a, r: check_parity(c.max_n, r),
    "integrality": lambda c, a, r: check_integrality(c.max_n, r),
    "a6_relation": lambda c, a, r: check_a6_relation(c.max_n, a),
    "series": lambda c, a, r: check_series_identities(c.series_order, a),
    "involutions": lambda c, a, r: check_involution_identity(c.oracle_max, a),
    "sign_flip": lambda c, a, r: check_sign_flip(c.seed),
}

CHECK_NAMES = sorted(_REGISTRY)


def _selected(config: VerifyConfig) -> list[str]:
    if config.checks is None:
        return list(CHECK_NAMES)
    names = sorted(set(config.checks))
    unknown = [x for x in names if x not in _REGISTRY]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return names


def required_length(config: VerifyConfig) -> int:
    """How many companion values (a_0..a_{N-1}) a run of this config reads."""
    need = 1
    for name in _selected(config):
        if name == "a6_relation":
            need = max(need, config.max_n + 7)
        elif name == "d_upper":
            mech = min(config.max_n, DEFAULT_MECHANISM_HI)
            need = max(need, 2 * mech + 1, mech + 2, config.max_n + 1)
        elif name == "series":
            need = max(need, config.series_order + 1)
        elif name == "involutions":
            need = max(need, config.oracle_max + 1)
        elif name == "sign_flip":
            pass
        else:
            need = max(need, config.max_n + 1)
    return need


def run_all(
    config: VerifyConfig,
    a_values: Optional[Sequence[int]] = None,
    jobs: int = 1,
) -> list[CheckResult]:
    """Run the selected checks and return their results, ordered by name.

    a_values, when given, replaces the internally computed sequence for every
    check that consumes companion values or rows; it must cover
    required_length(config) entries.
    """
    names = _selected(config)
    if a_values is None:
        a_values = a_seq(required_length(config) - 1)
    elif len(a_values) < required_length(config):
        raise ValueError("a_values too short for this configuration")
    rows = None
    if any(name in _ROWS_CHECKS for name in names):
        rows = rows_from_a(a_values[: config.max_n + 1])
    tasks = [(name, _REGISTRY[name]) for name in names]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda t: t[1](config, a_values, rows), tasks))
    else:
        results = [fn(config, a_values, rows) for _, fn in tasks]
    return results
