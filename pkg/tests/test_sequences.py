from fractions import Fraction
from itertools import islice

import pytest

from seqlab.exact import gcd, v2
from seqlab.sequences import (
    MoebiusMatrix,
    a_closed,
    a_iter,
    a_mod,
    a_seq,
    a6_step,
    d,
    d_closed,
    e_closed,
    integer_indices,
    moebius,
    moebius_apply,
    q_step,
    rows_from_a,
    table,
    x_seq,
)

FIRST_A = [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496]

FIRST_X = [
    Fraction(1),
    Fraction(1),
    Fraction(2),
    Fraction(2),
    Fraction(5, 2),
    Fraction(13, 5),
    Fraction(38, 13),
    Fraction(58, 19),
    Fraction(191, 58),
    Fraction(655, 191),
]


def test_a_seq_first_values():
    assert a_seq(10) == FIRST_A


def test_a_iter_streams_the_same_values():
    assert list(islice(a_iter(), 11)) == FIRST_A


def test_a_seq_rejects_negative():
    with pytest.raises(ValueError):
        a_seq(-1)


def test_a_closed_agrees_with_recurrence():
    a = a_seq(60)
    for n in range(61):
        assert a_closed(n) == a[n]


def test_x_seq_first_values():
    assert x_seq(9) == FIRST_X


def test_x_is_ratio_of_consecutive_a():
    a = a_seq(40)
    xs = x_seq(40)
    for n in range(1, 41):
        assert xs[n] == Fraction(a[n], a[n - 1])


def test_x_recurrence_holds():
    xs = x_seq(30)
    for n in range(30):
        assert xs[n + 1] == 1 + Fraction(n, 1) / xs[n]


def test_a_mod_matches_full_precision():
    a = a_seq(80)
    for m in (2, 3, 7, 10, 97):
        assert a_mod(80, m) == [v % m for v in a]


def test_a_mod_rejects_bad_modulus():
    with pytest.raises(ValueError):
        a_mod(5, 1)


def test_d_values():
    assert [d(n) for n in range(1, 10)] == [1, 1, 2, 2, 2, 2, 4, 4, 4]
    with pytest.raises(ValueError):
        d(0)


def test_closed_forms_match_definitions():
    a = a_seq(200)
    for n in range(201):
        assert e_closed(n) == v2(a[n])
        if n >= 1:
            assert d_closed(n) == gcd(a[n], a[n - 1])


def test_closed_form_domains():
    with pytest.raises(ValueError):
        e_closed(-1)
    with pytest.raises(ValueError):
        d_closed(0)


def test_moebius_matrix_identity_and_det():
    ident = MoebiusMatrix.identity()
    assert ident.det == 1
    m = MoebiusMatrix(1, 4, 1, 0)
    assert m.det == -4
    assert (m @ ident) == m
    assert (ident @ m) == m


def test_moebius_one_step_and_two_step_shapes():
    n = 5
    assert moebius(n, 1) == MoebiusMatrix(1, n, 1, 0)
    assert moebius(n, 2) == MoebiusMatrix(n + 2, n, 1, n)
    assert moebius(n, 0) == MoebiusMatrix.identity()


def test_moebius_det_product_form():
    for n in range(0, 7):
        for k in range(0, 6):
            expected = (-1) ** k
            for j in range(k):
                expected *= n + j
            assert moebius(n, k).det == expected


def test_moebius_transports_the_orbit():
    xs = x_seq(25)
    for n in range(12):
        for k in range(0, 9):
            m = moebius(n, k)
            assert moebius_apply(m, xs[n]) == xs[n + k]


def test_moebius_apply_pole():
    m = moebius(0, 1)  # maps x to x/x... with a pole at 0
    with pytest.raises(ZeroDivisionError):
        moebius_apply(m, Fraction(0))


def test_a6_step_instances():
    a = a_seq(10)
    assert a6_step(2, a[0], a[4]) == a[8] == 764
    assert a6_step(3, a[1], a[5]) == a[9] == 2620
    assert a6_step(4, a[2], a[6]) == a[10] == 9496
    with pytest.raises(ValueError):
        a6_step(1, 1, 1)


def test_q_step_instances():
    rows = table(20)
    q = [r.q for r in rows]
    for n in range(2, 15):
        assert q_step(n, q[n - 2], q[n + 2]) == q[n + 6]
    with pytest.raises(ValueError):
        q_step(1, 1, 1)


def test_rows_golden_entries():
    rows = table(9)
    r4 = rows[4]
    assert (r4.n, r4.a, r4.x, r4.d, r4.e, r4.q, r4.D) == (4, 10, Fraction(5, 2), 2, 1, 5, 2)
    r9 = rows[9]
    assert (r9.n, r9.a, r9.x, r9.d, r9.e, r9.q, r9.D) == (9, 2620, Fraction(655, 191), 4, 2, 655, 191)


def test_rows_internal_consistency():
    rows = table(120)
    for n in range(1, 121):
        row = rows[n]
        assert row.x == Fraction(rows[n].a, rows[n - 1].a)
        assert row.D * row.d == rows[n - 1].a
        assert row.q << row.e == row.a
        assert row.q % 2 == 1
        assert row.d == gcd(row.a, rows[n - 1].a)


def test_rows_from_a_accepts_any_prefix():
    rows = rows_from_a([1, 1, 2, 4])
    assert [r.a for r in rows] == [1, 1, 2, 4]
    assert rows[0].x == Fraction(1)
    assert rows[0].d == 1


def test_integer_indices():
    assert integer_indices(table(50)) == [0, 1, 2, 3]
