"""Partitions, elementary and Schur polynomials."""

import pytest

from swk.errors import RingError
from swk.rings import CoeffRing, LaurentPoly, is_symmetric
from swk.symfun import (conjugate, dominant_weights_in_box, elementary,
                        eval_in_elementary, is_dominant, schur_bialternant,
                        schur_jacobi_trudi)


def semistandard_tableau_sum(ring, mu, n):
    """Independent Schur oracle: sum X^weight over semistandard
    tableaux of shape mu with entries in 1..n (rows weakly increase,
    columns strictly increase)."""
    rows = [m for m in mu if m > 0]
    fillings = []

    def fill(r, c, tab):
        if r == len(rows):
            fillings.append([row[:] for row in tab])
            return
        nr, nc = (r, c + 1) if c + 1 < rows[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, tab[r][c - 1])
        if r > 0 and c < rows[r - 1]:
            lo = max(lo, tab[r - 1][c] + 1)
        for val in range(lo, n + 1):
            tab[r][c] = val
            fill(nr, nc, tab)
        tab[r][c] = 0

    if rows:
        fill(0, 0, [[0] * m for m in rows])
    else:
        fillings.append([])
    total = LaurentPoly.zero(ring, n)
    for tab in fillings:
        e = [0] * n
        for row in tab:
            for val in row:
                e[val - 1] += 1
        total = total + LaurentPoly.monomial(ring, n, e)
    return total


def test_elementary_examples():
    R = CoeffRing.symbolic(3)
    assert elementary(R, 0, 2) == LaurentPoly.one(R, 2)
    e1 = elementary(R, 1, 2)
    assert e1.terms == {(1, 0): R.one, (0, 1): R.one}
    e2 = elementary(R, 2, 3)
    assert sorted(e2.terms) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    with pytest.raises(RingError):
        elementary(R, 4, 3)


def test_schur_single_box_and_column():
    R = CoeffRing.symbolic(2)
    assert schur_bialternant(R, (1, 0)) == elementary(R, 1, 2)
    assert schur_bialternant(R, (1, 1)) == elementary(R, 2, 2)


def test_schur_row_two_against_tableau_oracle():
    R = CoeffRing.symbolic(2)
    assert schur_bialternant(R, (2, 0)) == semistandard_tableau_sum(
        R, (2, 0), 2)


def test_schur_tableau_oracle_more_shapes():
    R = CoeffRing.symbolic(3)
    for mu in [(2, 1, 0), (3, 0, 0), (2, 2, 0), (1, 1, 1), (3, 2, 1)]:
        assert schur_bialternant(R, mu) == semistandard_tableau_sum(
            R, mu, 3), mu


def test_schur_rejects_non_dominant():
    R = CoeffRing.symbolic(2)
    with pytest.raises(RingError):
        schur_bialternant(R, (0, 1))


def test_schur_negative_entries_laurent():
    R = CoeffRing.symbolic(2)
    en = LaurentPoly.monomial(R, 2, (1, 1))
    assert schur_bialternant(R, (0, -1)) * en == schur_bialternant(R, (1, 0))


def test_jacobi_trudi_examples():
    assert schur_jacobi_trudi((1,), 1) == {(1,): 1}
    assert schur_jacobi_trudi((1, 1), 2) == {(0, 1): 1}
    assert schur_jacobi_trudi((2, 0), 2) == {(2, 0): 1, (0, 1): -1}
    with pytest.raises(RingError):
        schur_jacobi_trudi((1, 1, 1), 2)


def test_eval_in_elementary_substitution():
    R = CoeffRing.symbolic(2)
    # E1^2 - E2 at (c1, c2)
    val = eval_in_elementary({(2, 0): 1, (0, 1): -1}, [R.c(1), R.c(2)], R.one)
    assert val == R.c(1) * R.c(1) - R.c(2)
    F = CoeffRing.prime_field(2, ell=7, q=2, sqrt_q=3, c_values=[1, 1])
    val = eval_in_elementary({(0, 1): 1}, [F.from_int(3), F.from_int(5)],
                             F.one)
    assert val == F.from_int(5)


def test_jacobi_trudi_matches_bialternant_21():
    R = CoeffRing.symbolic(2)
    es = [elementary(R, 1, 2), elementary(R, 2, 2)]
    got = eval_in_elementary(schur_jacobi_trudi((2, 1), 2), es,
                             LaurentPoly.one(R, 2))
    assert got == schur_bialternant(R, (2, 1))


def test_schur_symmetry_and_shift():
    R = CoeffRing.symbolic(3)
    en = elementary(R, 3, 3)
    for mu in [(2, 1, 0), (3, 1, 1), (2, 2, 2)]:
        s = schur_bialternant(R, mu)
        assert is_symmetric(s)
        assert schur_bialternant(R, tuple(m + 1 for m in mu)) == en * s


def test_conjugate_involution():
    for parts in [(3, 1), (4, 4, 2), (1,), (), (5, 3, 3, 1)]:
        padded = conjugate(conjugate(parts))
        assert padded == tuple(p for p in parts if p > 0)


def test_dominance_and_box():
    assert is_dominant((2, 2, 1)) and not is_dominant((1, 2))
    box = dominant_weights_in_box(2, 1)
    assert set(box) == {(0, 0), (1, 0), (1, 1), (0, -1), (1, -1), (-1, -1)}
    # graded-lex: sorted by total size then lexicographically
    assert box == sorted(box, key=lambda m: (sum(m), m))
