"""Splitting-algebra module, banality, span criterion."""

import random
from math import factorial

import pytest

from swk.errors import DimensionError, RingError
from swk.linalg import mat_apply, mat_mul
from swk.module import (a_span_dim, artin_basis, banal_class, build_module,
                        gl_order, ihara_criterion, normal_form,
                        satake_module_action, splitting_basis)
from swk.module import _Reducer, ej_scalars
from swk.rings import CoeffRing, LaurentPoly
from swk.symfun import elementary
from swk.whittaker import HeckeChar


def field_char(n, ell=5, q=11, cs=None):
    cs = cs or list(range(1, n + 1))
    R = CoeffRing.prime_field(n, ell=ell, q=q, sqrt_q=1, c_values=cs)
    return R, HeckeChar.generic(R)


def test_banal_classifications():
    assert banal_class(2, 3, 7).verdict == "banal"
    assert banal_class(2, 7, 3).verdict == "quasi-banal-limit"
    assert banal_class(3, 7, 3).verdict == "neither"
    assert banal_class(2, 4, 0).verdict == "banal"
    assert gl_order(2, 3) == 48


def test_banal_rejects_bad_input():
    with pytest.raises(RingError):
        banal_class(2, 6, 5)  # q not a prime power
    with pytest.raises(RingError):
        banal_class(2, 3, 9)  # ell not prime
    with pytest.raises(RingError):
        banal_class(2, 9, 3)  # ell divides q


def test_splitting_basis_rank_two():
    R = CoeffRing.symbolic(2)
    ch = HeckeChar.generic(R)
    g1, g2 = splitting_basis(ch)
    c1, c2 = ej_scalars(ch)
    X1 = LaurentPoly.variable(R, 2, 0)
    X2 = LaurentPoly.variable(R, 2, 1)
    assert g1 == X1 ** 2 - X1 * c1 + LaurentPoly.const(R, 2, c2)
    assert g2 == X2 + X1 - LaurentPoly.const(R, 2, c1)


def test_splitting_basis_rank_one():
    R = CoeffRing.symbolic(1)
    ch = HeckeChar.generic(R)
    (g1,) = splitting_basis(ch)
    assert g1 == (LaurentPoly.variable(R, 1, 0)
                  - LaurentPoly.const(R, 1, R.c(1)))


def test_reducers_kill_ideal_members():
    # g_n times any Artin monomial reduces to zero
    R = CoeffRing.symbolic(3)
    ch = HeckeChar.generic(R)
    red = _Reducer(ch)
    gn = red.gs[-1]
    for mono in artin_basis(3):
        f = gn * LaurentPoly.monomial(R, 3, mono)
        assert red.normal_form(f) == {}


def test_elementary_symmetric_in_ideal():
    # e_j(X) - c_j reduces to zero for every j
    R = CoeffRing.symbolic(3)
    ch = HeckeChar.generic(R)
    red = _Reducer(ch)
    for j, cj in enumerate(ej_scalars(ch), start=1):
        f = elementary(R, j, 3) - LaurentPoly.const(R, 3, cj)
        assert red.normal_form(f) == {}


def test_normal_form_examples():
    R = CoeffRing.symbolic(2)
    ch = HeckeChar.generic(R)
    c1, c2 = ej_scalars(ch)
    nf = normal_form(ch, LaurentPoly.monomial(R, 2, (2, 0)))
    assert nf == {(1, 0): c1, (0, 0): -c2}
    nf = normal_form(ch, LaurentPoly.monomial(R, 2, (0, 1)))
    assert nf == {(0, 0): c1, (1, 0): R.from_int(-1)}
    for mono in artin_basis(2):
        nf = normal_form(ch, LaurentPoly.monomial(R, 2, mono))
        assert nf == {mono: R.one}


def test_normal_form_idempotent_and_multiplicative():
    rng = random.Random(200)
    R, ch = field_char(3)
    red = _Reducer(ch)

    def rand_poly():
        terms = {}
        for _ in range(3):
            e = tuple(rng.randint(-2, 3) for _ in range(3))
            terms[e] = R.from_int(rng.randint(1, 4))
        return LaurentPoly(R, 3, terms)

    def as_poly(coords):
        out = LaurentPoly.zero(R, 3)
        for e, c in coords.items():
            out = out + LaurentPoly.monomial(R, 3, e, c)
        return out

    for _ in range(10):
        a, b = rand_poly(), rand_poly()
        na, nb = red.normal_form(a), red.normal_form(b)
        # idempotence
        assert red.normal_form(as_poly(na)) == na
        # homomorphism modulo the ideal
        assert red.normal_form(a * b) == \
            red.normal_form(as_poly(na) * as_poly(nb))


def test_build_module_rank_two_matrix():
    R = CoeffRing.symbolic(2)
    ch = HeckeChar.generic(R)
    mod = build_module(ch)
    c1, c2 = ej_scalars(ch)
    # basis (1, X1); multiplication by X1 in columns
    assert mod.basis == [(0, 0), (1, 0)]
    x1 = mod.xmat[0]
    assert x1[0][0].is_zero() and x1[1][0].is_one()
    assert x1[0][1] == -c2 and x1[1][1] == c1
    # X2 matrix is c1 - X1
    x2 = mod.xmat[1]
    assert x2[0][0] == c1 and x2[1][1].is_zero()


def test_module_dimensions():
    for n in (2, 3):
        R = CoeffRing.symbolic(n)
        mod = build_module(HeckeChar.generic(R))
        assert mod.dim == factorial(n)
    R, ch = field_char(4)
    mod = build_module(ch, q_for_classification=11)
    assert mod.dim == 24


def test_build_module_warns_outside_quasi_banal():
    # ell = 3, n = 3: 3 > 3 fails, q = 7 = 1 mod 3, so 'neither'
    R = CoeffRing.prime_field(3, ell=3, q=7, sqrt_q=1, c_values=[1, 1, 1])
    ch = HeckeChar.generic(R)
    with pytest.warns(UserWarning):
        mod = build_module(ch, q_for_classification=7)
    assert mod.regime == "neither"
    assert mod.dim == 6  # the formal model still has the right size


def test_span_cyclic_zero_eigen():
    R, ch = field_char(3)
    mod = build_module(ch, q_for_classification=11)
    assert ihara_criterion(mod, mod.vector_of_one()).verdict == \
        "generic-cyclic"
    v0 = ihara_criterion(mod, [R.zero] * 6)
    assert v0.span_dim == 0 and v0.verdict == "not-generating"
    # common eigenvector over a split instance (roots 1 and 2 of
    # X^2 - 3X + 2 over F_5)
    R2, ch2 = field_char(2, cs=[3, 2])
    mod2 = build_module(ch2, q_for_classification=11)
    eig = [R2.from_int(3), R2.from_int(1)]
    assert mat_apply(mod2.xmat[0], eig) == [x * R2.from_int(1) for x in eig]
    got = ihara_criterion(mod2, eig)
    assert got.span_dim == 1 and got.verdict == "not-generating"


def test_span_invariance_under_unit_scaling_and_base_change():
    rng = random.Random(201)
    R, ch = field_char(3)
    mod = build_module(ch, q_for_classification=11)
    f = [R.from_int(rng.randint(0, 4)) for _ in range(6)]
    base = a_span_dim(R, mod.xmat + mod.xmat_inv, f)
    # unit scaling
    u = R.from_int(3)
    assert a_span_dim(R, mod.xmat + mod.xmat_inv,
                      [u * x for x in f]) == base
    # simultaneous change of basis by a random invertible P
    while True:
        P = [[R.from_int(rng.randint(0, 4)) for _ in range(6)]
             for _ in range(6)]
        Pinv = _invert_over_field(R, P)
        if Pinv is not None:
            break
    gens = [mat_mul(mat_mul(P, g), Pinv) for g in mod.xmat + mod.xmat_inv]
    assert a_span_dim(R, gens, mat_apply(P, f)) == base


def _invert_over_field(R, mat):
    d = len(mat)
    aug = [[mat[i][j] for j in range(d)]
           + [R.one if i == j else R.zero for j in range(d)]
           for i in range(d)]
    row = 0
    for col in range(d):
        piv = next((r for r in range(row, d)
                    if not aug[r][col].is_zero()), None)
        if piv is None:
            return None
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [inv * x for x in aug[row]]
        for r in range(d):
            if r != row and not aug[r][col].is_zero():
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[row])]
        row += 1
    return [r[d:] for r in aug]


def test_span_dimension_mismatch():
    R, ch = field_char(2)
    mod = build_module(ch, q_for_classification=11)
    with pytest.raises(DimensionError):
        ihara_criterion(mod, [R.one] * 3)


def test_symbolic_span():
    R = CoeffRing.symbolic(3)
    mod = build_module(HeckeChar.generic(R))
    assert ihara_criterion(mod, mod.vector_of_one()).span_dim == 6


def test_satake_module_action():
    R = CoeffRing.symbolic(2)
    one = LaurentPoly.one(R, 2)
    e1 = elementary(R, 1, 2)
    m = LaurentPoly.monomial(R, 2, (1, -1))
    assert satake_module_action(one, m) == m
    assert satake_module_action(e1, one) == e1
    # multiplicative and linear in the module argument
    e2 = elementary(R, 2, 2)
    assert satake_module_action(e1 * e2, m) == \
        satake_module_action(e1, satake_module_action(e2, m))
    assert satake_module_action(e1, m + one) == \
        satake_module_action(e1, m) + satake_module_action(e1, one)
    with pytest.raises(RingError):
        satake_module_action(LaurentPoly.variable(R, 2, 0), m)
