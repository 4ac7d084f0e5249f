"""Whittaker values: closed formula, recursion solver, operators."""

import pytest

from swk.errors import BoundExhausted, DimensionError, RingError
from swk.rings import CoeffRing
from swk.whittaker import (HeckeChar, WhittakerTable, ev1, hecke_apply,
                           recursion_solve, whittaker_levi, whittaker_value)


def sym_char(n):
    R = CoeffRing.symbolic(n)
    return R, HeckeChar.generic(R)


def test_origin_is_one():
    for n in (1, 2, 3):
        R, ch = sym_char(n)
        assert whittaker_value(ch, (0,) * n).is_one()


def test_rank_one_powers():
    R, ch = sym_char(1)
    lam = ch.values[0]
    for m in range(0, 5):
        assert whittaker_value(ch, (m,)) == lam ** m


def test_non_dominant_vanishes():
    R, ch = sym_char(2)
    assert whittaker_value(ch, (0, 1)).is_zero()
    R3, ch3 = sym_char(3)
    for mu in [(0, 0, 1), (1, 2, 0), (-1, 0, 0)]:
        assert whittaker_value(ch3, mu).is_zero()


def test_frozen_rank_two_values():
    # (1,0) -> q^-1 lam1 and (1,1) -> lam2, from the j=1 and j=2
    # recursion instances at the origin
    R, ch = sym_char(2)
    assert whittaker_value(ch, (1, 0)) == R.q_pow(-1) * R.c(1)
    assert whittaker_value(ch, (1, 1)) == R.c(2)
    # (1,-1) -> q^-2 (lam1^2 - q lam2) lam2^-1, solver-derived
    expect = (R.q_pow(-2) * R.c(1) * R.c(1) * R.c_last_inv()
              - R.q_pow(-1))
    assert whittaker_value(ch, (1, -1)) == expect


def test_recursion_table_rank_two_bound_one():
    R, ch = sym_char(2)
    t = recursion_solve(ch, 1)
    assert set(t.entries) == {(0, 0), (1, 0), (1, 1), (0, -1), (1, -1),
                              (-1, -1)}
    assert t.value((0, 0)).is_one()
    assert t.value((1, 0)) == R.q_pow(-1) * R.c(1)
    assert t.value((1, 1)) == R.c(2)
    assert t.value((1, -1)) == (R.q_pow(-2) * R.c(1) * R.c(1)
                                * R.c_last_inv() - R.q_pow(-1))
    # cross-check every entry against the closed formula
    for mu in t.weights():
        assert t.value(mu) == whittaker_value(ch, mu)


def test_recursion_rank_one_includes_negative_levels():
    R, ch = sym_char(1)
    t = recursion_solve(ch, 2)
    lam, lam_inv = ch.values[0], ch.inv_last
    assert t.value((2,)) == lam * lam
    assert t.value((-2,)) == lam_inv * lam_inv


def test_formula_recursion_agreement_ranks():
    for n in (1, 2, 3):
        R, ch = sym_char(n)
        t = recursion_solve(ch, 2)
        for mu in t.weights():
            assert t.value(mu) == whittaker_value(ch, mu), (n, mu)


def test_eigen_identity():
    for n in (2, 3):
        R, ch = sym_char(n)
        t = recursion_solve(ch, 2)
        for j in range(1, n + 1):
            out = hecke_apply(j, t)
            for mu in out.weights():
                assert out.value(mu) == ch.values[j - 1] * t.value(mu)


def test_hecke_apply_rank_one_is_shift():
    R, ch = sym_char(1)
    t = recursion_solve(ch, 2)
    out = hecke_apply(1, t)
    for m in range(-1, 2):
        assert out.value((m,)) == t.value((m + 1,))


def test_hecke_apply_zero_table_and_bound():
    R, ch = sym_char(2)
    zero = WhittakerTable(ch, 1, {mu: R.zero
                                  for mu in recursion_solve(ch, 1).weights()})
    out = hecke_apply(1, zero)
    assert all(v.is_zero() for v in out.entries.values())
    with pytest.raises(BoundExhausted):
        hecke_apply(1, out)  # bound 0 exhausted


def test_shift_covariance():
    R, ch = sym_char(3)
    lam_n = ch.values[-1]
    t = recursion_solve(ch, 2)
    for mu in recursion_solve(ch, 1).weights():
        shifted = tuple(m + 1 for m in mu)
        assert t.value(shifted) == lam_n * t.value(mu)


def test_specialization_commutes():
    R, ch = sym_char(2)
    F = CoeffRing.prime_field(2, ell=7, q=3, sqrt_q=None, c_values=[2, 6])
    chF = ch.specialize(F)
    for mu in [(0, 0), (2, 1), (1, -1), (3, -2)]:
        assert whittaker_value(ch, mu).specialize(F) == \
            whittaker_value(chF, mu)


def test_levi_blocks():
    # torus: product of rank-one values; use unit values so each
    # block is a legitimate rank-one character
    R = CoeffRing.symbolic(3)
    chars = [HeckeChar(R, (R.v_pow(2 * k),), R.v_pow(-2 * k))
             for k in (1, 2, 3)]
    val = whittaker_levi(chars, (2, 1, 1))
    assert val == R.v_pow(2 * 2) * R.v_pow(4 * 1) * R.v_pow(6 * 1)
    # any non-dominant segment kills it (here each segment has size 1,
    # so instead check a rank-two block with a bad segment)
    R2, ch2 = sym_char(2)
    assert whittaker_levi([ch2], (0, 1)).is_zero()
    # single block is the plain value
    assert whittaker_levi([ch2], (2, -1)) == whittaker_value(ch2, (2, -1))
    # origin normalizes to 1
    assert whittaker_levi(chars, (0, 0, 0)).is_one()
    with pytest.raises(DimensionError):
        whittaker_levi(chars, (1, 0))


def test_ev1():
    R, ch = sym_char(2)
    t = recursion_solve(ch, 1)
    assert ev1(t).is_one()
    two = t.scale(R.from_int(2))
    assert ev1(two) == R.from_int(2)
    zero = t.scale(R.zero)
    assert ev1(zero).is_zero()


def test_char_validation():
    R = CoeffRing.symbolic(2)
    with pytest.raises(RingError):
        HeckeChar(R, (R.c(1), R.c(2)), R.c(2))  # c2 * c2 != 1
