"""The n!-dimensional unramified module at Iwahori level.

Concretely this is the splitting-algebra model: the quotient of the
Laurent ring k[X_1^{+-1}..X_n^{+-1}] by the ideal (e_j(X) - c_j),
where c_j = q^{j(j-1)/2} lambda_j are the rescaled character values.
The triangular reducers

    g_1(X_1) = X_1^n - c_1 X_1^{n-1} + ... + (-1)^n c_n,
    g_{i+1}(T) = g_i(T) / (T - X_i)  (synthetic quotient),

are monic of degree n-i+1 in X_i, so every element has a unique
normal form over the Artin monomial basis {X^mu : 0 <= mu_i <= n-i}
of size n!.  Negative exponents clear through X_1...X_n = c_n, a unit.

Generator matrices for the X_j (with exact inverses) and for the
finite reflections S_i make this an algebra module; the reflection
action is the divided-difference formula on the cyclic vector, with
the finite subalgebra acting through the index character q^{l(w)}.
The cyclic-generation test (`a_span_dim` / `ihara_criterion`) asks
whether a vector's orbit under the commuting generators spans all n!
dimensions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import factorial

from .errors import DimensionError, RingError
from .linalg import (SpanBasis, is_zero_matrix, mat_add, mat_apply, mat_eq,
                     mat_identity, mat_mul, mat_scalar, mat_scale, mat_sub)
from .hecke import divided_correction
from .rings import CoeffRing, LaurentPoly, RingElem, is_symmetric
from .whittaker import HeckeChar

__all__ = [
    "BanalClass", "banal_class", "gl_order",
    "splitting_basis", "artin_basis", "normal_form",
    "UnramifiedModule", "build_module",
    "a_span_dim", "IharaVerdict", "ihara_criterion",
    "satake_module_action",
]


# -- banality -----------------------------------------------------------------


def gl_order(n: int, q: int) -> int:
    """#GL_n(F_q) = q^{n(n-1)/2} * prod_{i=1}^{n} (q^i - 1)."""
    out = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= q ** i - 1
    return out


def _is_prime(m: int) -> bool:
    from .rings import is_prime
    return is_prime(m)


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True  # q itself prime


@dataclass(frozen=True)
class BanalClass:
    """Classification of (n, q, ell): banal / quasi-banal-limit / neither."""
    n: int
    q: int
    ell: int
    verdict: str
    gl_order: int


def banal_class(n: int, q: int, ell: int) -> BanalClass:
    """Classify the characteristic.

    banal: ell = 0 or ell does not divide #GL_n(F_q);
    quasi-banal-limit: not banal, but ell > n and q = 1 mod ell;
    neither: everything else.

    >>> banal_class(2, 3, 7).verdict
    'banal'
    >>> banal_class(2, 7, 3).verdict
    'quasi-banal-limit'
    >>> banal_class(3, 7, 3).verdict
    'neither'
    """
    if not _is_prime_power(q):
        raise RingError(f"q={q} is not a prime power")
    if ell != 0 and not _is_prime(ell):
        raise RingError(f"ell={ell} is neither 0 nor prime")
    order = gl_order(n, q)
    if ell == 0:
        return BanalClass(n, q, ell, "banal", order)
    if q % ell == 0:
        raise RingError("ell divides q")
    if order % ell != 0:
        verdict = "banal"
    elif ell > n and q % ell == 1:
        verdict = "quasi-banal-limit"
    else:
        verdict = "neither"
    return BanalClass(n, q, ell, verdict, order)


# -- splitting algebra ---------------------------------------------------------


def ej_scalars(char: HeckeChar) -> list[RingElem]:
    """The eigenvalues c_j = q^{j(j-1)/2} lambda_j of e_j(X)."""
    return char.schur_args()


def splitting_basis(char: HeckeChar) -> list[LaurentPoly]:
    """Triangular reducers g_1..g_n for the ideal (e_j(X) - c_j).

    g_1 is the generic characteristic polynomial in X_1; each g_{i+1}
    is the synthetic quotient of g_i by (T - X_i) with T renamed to
    X_{i+1}.  g_i is monic of degree n - i + 1 in X_i with
    coefficients involving only X_1..X_{i-1}.
    """
    ring = char.ring
    n = char.n
    cs = ej_scalars(char)
    sign = 1
    # g_1 = X_1^n - c_1 X_1^{n-1} + ... + (-1)^n c_n
    terms = {_unit_exp(n, 0, n): ring.one}
    for j, c in enumerate(cs, start=1):
        sign = -sign
        key = _unit_exp(n, 0, n - j)
        coeff = ring.from_int(sign) * c
        terms[key] = terms.get(key, ring.zero) + coeff
    gs = [LaurentPoly(ring, n, terms)]
    for i in range(n - 1):
        gs.append(_synthetic_quotient(gs[-1], i))
    return gs


def _unit_exp(n: int, i: int, k: int) -> tuple[int, ...]:
    e = [0] * n
    e[i] = k
    return tuple(e)


def _synthetic_quotient(g: LaurentPoly, i: int) -> LaurentPoly:
    """Quotient of g by (X_{i+1} - X_i) with the quotient written in
    the variable X_{i+2}; remainders are dropped (they vanish in the
    quotient algebra, by design of the reducer tower)."""
    ring, n = g.ring, g.nvars
    by_deg: dict[int, dict] = {}
    for e, c in g.terms.items():
        d = e[i]
        rest = e[:i] + (0,) + e[i + 1:]
        by_deg.setdefault(d, {})[rest] = c
    top = max(by_deg)
    out: dict = {}
    carry: dict = {}

    def add_xi_mul(row, acc):
        # acc + X_i * row
        for e, c in row.items():
            e2 = list(e)
            e2[i] += 1
            e2 = tuple(e2)
            s = acc.get(e2)
            s = c if s is None else s + c
            if s.is_zero():
                acc.pop(e2, None)
            else:
                acc[e2] = s
        return acc

    for d in range(top, 0, -1):
        carry = add_xi_mul(carry, dict(by_deg.get(d, {})))
        for e, c in carry.items():
            e2 = list(e)
            e2[i + 1] += d - 1
            out[tuple(e2)] = c
    return LaurentPoly(ring, n, out)


def artin_basis(n: int) -> list[tuple[int, ...]]:
    """The monomial exponents {mu : 0 <= mu_i <= n-i}, graded-lex."""
    out: list[tuple[int, ...]] = [()]
    for i in range(1, n + 1):
        out = [e + (k,) for e in out for k in range(n - i + 1)]
    out.sort(key=lambda e: (sum(e), e))
    return out


class _Reducer:
    """Normal-form engine for one character."""

    def __init__(self, char: HeckeChar):
        self.char = char
        self.ring = char.ring
        self.n = char.n
        self.gs = splitting_basis(char)
        self.cn_inv = (self.ring.q_pow(-(self.n * (self.n - 1) // 2))
                       * char.inv_last)
        self.basis = artin_basis(self.n)
        self.index = {e: k for k, e in enumerate(self.basis)}

    def normal_form(self, f: LaurentPoly) -> dict[tuple[int, ...], RingElem]:
        """Unique Artin-basis expansion of f modulo the ideal."""
        ring, n = self.ring, self.n
        if f.nvars != n:
            raise DimensionError("variable count mismatch")
        # clear negative exponents through the unit X_1..X_n = c_n
        shift = 0
        for e in f.terms:
            m = min(e)
            if m < shift:
                shift = m
        scalar = ring.one
        if shift < 0:
            f = f * LaurentPoly.monomial(ring, n, (-shift,) * n)
            scalar = self.cn_inv ** (-shift)
        # triangular reduction, later variables first
        for k in range(n - 1, -1, -1):
            cap = n - 1 - k  # Artin bound for X_{k+1}
            g = self.gs[k]
            lead = _unit_exp(n, k, cap + 1)
            while True:
                bad = [(e, c) for e, c in f.terms.items() if e[k] > cap]
                if not bad:
                    break
                bad.sort(key=lambda t: t[0][k], reverse=True)
                e, c = bad[0]
                cof = tuple(a - b for a, b in zip(e, lead))
                f = f - LaurentPoly.monomial(ring, n, cof, c) * g
        out: dict = {}
        for e, c in f.terms.items():
            if e not in self.index:
                raise RingError(f"reduction left a non-basis monomial {e}")
            out[e] = scalar * c
        return {e: c for e, c in out.items() if not c.is_zero()}

    def to_vector(self, coords: dict) -> list[RingElem]:
        v = [self.ring.zero] * len(self.basis)
        for e, c in coords.items():
            v[self.index[e]] = c
        return v


def normal_form(char: HeckeChar, f: LaurentPoly) -> dict:
    """Artin-basis expansion of a Laurent polynomial modulo the ideal
    (e_j(X) - c_j); see `_Reducer.normal_form`."""
    return _Reducer(char).normal_form(f)


# -- the module ----------------------------------------------------------------


@dataclass
class UnramifiedModule:
    """Generator matrices of the splitting algebra, acting on itself.

    Fields: the Artin basis labels; matrices for multiplication by
    each X_j with exact inverses; matrices for the finite reflections
    S_i; and the banality regime label (symbolic rings are 'generic').
    """

    ring: CoeffRing
    char: HeckeChar
    n: int
    dim: int
    basis: list[tuple[int, ...]]
    xmat: list
    xmat_inv: list
    smat: list
    regime: str

    def vector_of_one(self) -> list[RingElem]:
        v = [self.ring.zero] * self.dim
        v[self.basis.index((0,) * self.n)] = self.ring.one
        return v


def build_module(char: HeckeChar, q_for_classification: int | None = None,
                 check: bool = True) -> UnramifiedModule:
    """Build the module and verify its structural identities.

    Outside the quasi-banal regime the algebra still makes sense and
    is built anyway, labeled as a formal model; a warning is issued
    since the representation-theoretic reading is unjustified there.
    """
    ring = char.ring
    n = char.n
    red = _Reducer(char)
    basis = red.basis
    dim = len(basis)
    assert dim == factorial(n)

    regime = "generic"
    if ring.kind == "prime-field":
        if q_for_classification is not None:
            regime = banal_class(n, q_for_classification, ring.ell).verdict
        elif ring.q_image == 1 and ring.ell > n:
            # image of q is 1, so any preimage prime power q = 1 mod ell
            regime = "quasi-banal-limit"
        else:
            regime = "unclassified"
    if regime in ("neither", "unclassified"):
        warnings.warn(
            f"regime {regime!r}: building a formal model outside the "
            "quasi-banal hypotheses", stacklevel=2)

    def col_matrix(images: list[dict]) -> list[list[RingElem]]:
        mat = [[ring.zero] * dim for _ in range(dim)]
        for j, coords in enumerate(images):
            for e, c in coords.items():
                mat[red.index[e]][j] = c
        return mat

    xmat = []
    for jvar in range(n):
        images = []
        for b in basis:
            xb = LaurentPoly.monomial(ring, n,
                                      tuple(e + (1 if k == jvar else 0)
                                            for k, e in enumerate(b)))
            images.append(red.normal_form(xb))
        xmat.append(col_matrix(images))

    cs = ej_scalars(char)
    cn_inv_mat = mat_scalar(ring, dim, red.cn_inv)
    xmat_inv = []
    for jvar in range(n):
        prod = cn_inv_mat
        for k in range(n):
            if k != jvar:
                prod = mat_mul(prod, xmat[k])
        xmat_inv.append(prod)

    q = ring.q_pow(1)
    qm1 = q - ring.one
    smat = []
    for i in range(1, n):
        images = []
        for b in basis:
            f = LaurentPoly.monomial(ring, n, b)
            swapped = f.swap_vars(i - 1, i)
            corr = divided_correction(f, i)
            images.append(red.normal_form(swapped * q + corr * qm1))
        smat.append(col_matrix(images))

    mod = UnramifiedModule(ring, char, n, dim, basis, xmat, xmat_inv,
                           smat, regime)
    if check:
        _verify_module(mod, cs)
    return mod


def _verify_module(mod: UnramifiedModule, cs: list[RingElem]) -> None:
    from itertools import combinations
    ring, n, dim = mod.ring, mod.n, mod.dim
    ident = mat_identity(ring, dim)
    # X_j commute and invert
    for a in range(n):
        if not mat_eq(mat_mul(mod.xmat[a], mod.xmat_inv[a]), ident):
            raise RingError("X_j inverse matrix failed")
        for b in range(a + 1, n):
            ab = mat_mul(mod.xmat[a], mod.xmat[b])
            ba = mat_mul(mod.xmat[b], mod.xmat[a])
            if not mat_eq(ab, ba):
                raise RingError("X matrices do not commute")
    # e_j of the matrices is the scalar c_j
    for j in range(1, n + 1):
        acc = None
        for sub in combinations(range(n), j):
            prod = ident
            for k in sub:
                prod = mat_mul(prod, mod.xmat[k])
            acc = prod if acc is None else mat_add(acc, prod)
        if not mat_eq(acc, mat_scalar(ring, dim, cs[j - 1])):
            raise RingError(f"e_{j} of the X matrices is not c_{j}")
    q = ring.q_pow(1)
    one = ring.one
    for i in range(1, n):
        S = mod.smat[i - 1]
        # (S - q)(S + 1) = 0
        lhs = mat_mul(mat_sub(S, mat_scalar(ring, dim, q)),
                      mat_add(S, mat_identity(ring, dim)))
        if not is_zero_matrix(lhs):
            raise RingError(f"S_{i} quadratic relation failed")
        # S_i X_{i+1} S_i = q X_i
        sxs = mat_mul(mat_mul(S, mod.xmat[i]), S)
        if not mat_eq(sxs, mat_scale(mod.xmat[i - 1], q)):
            raise RingError(f"S_{i} X_{i + 1} S_{i} != q X_{i}")
        # X_i S_i = S_i X_{i+1} + (q-1) X_i
        lhs = mat_mul(mod.xmat[i - 1], S)
        rhs = mat_add(mat_mul(S, mod.xmat[i]),
                      mat_scale(mod.xmat[i - 1], q - one))
        if not mat_eq(lhs, rhs):
            raise RingError(f"X_{i} S_{i} relation failed")
        # X_{i+1} S_i = S_i X_i - (q-1) X_i
        lhs = mat_mul(mod.xmat[i], S)
        rhs = mat_sub(mat_mul(S, mod.xmat[i - 1]),
                      mat_scale(mod.xmat[i - 1], q - one))
        if not mat_eq(lhs, rhs):
            raise RingError(f"X_{i + 1} S_{i} relation failed")
        # distant X commute with S_i
        for j in range(n):
            if j in (i - 1, i):
                continue
            if not mat_eq(mat_mul(mod.xmat[j], S), mat_mul(S, mod.xmat[j])):
                raise RingError("distant X/S commutation failed")
    for i in range(1, n - 1):
        a, b = mod.smat[i - 1], mod.smat[i]
        if not mat_eq(mat_mul(mat_mul(a, b), a), mat_mul(mat_mul(b, a), b)):
            raise RingError("braid relation failed")
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = mod.smat[i - 1], mod.smat[j - 1]
            if not mat_eq(mat_mul(a, b), mat_mul(b, a)):
                raise RingError("distant reflections do not commute")


# -- cyclic-span criterion -------------------------------------------------------


def a_span_dim(ring: CoeffRing, generators: list, f: list[RingElem]) -> int:
    """Dimension of the smallest subspace containing f and stable
    under the given matrices (exact; over the fraction field for the
    symbolic ring).  Breadth-first orbit with incremental echelon."""
    dim = len(f)
    for g in generators:
        if len(g) != dim or any(len(row) != dim for row in g):
            raise DimensionError("generator matrix shape mismatch")
    basis = SpanBasis(ring, dim)
    queue = []
    if basis.add(f):
        queue.append(f)
    while queue:
        v = queue.pop(0)
        for g in generators:
            w = mat_apply(g, v)
            if basis.add(w):
                queue.append(w)
    return basis.rank


@dataclass(frozen=True)
class IharaVerdict:
    span_dim: int
    n_factorial: int
    verdict: str  # "generic-cyclic" or "not-generating"


def ihara_criterion(mod: UnramifiedModule, f: list[RingElem]) -> IharaVerdict:
    """Does the commutative generator orbit of f span all n! dimensions?"""
    if len(f) != mod.dim:
        raise DimensionError(
            f"vector has length {len(f)}, module has dimension {mod.dim}")
    d = a_span_dim(mod.ring, mod.xmat + mod.xmat_inv, f)
    verdict = "generic-cyclic" if d == mod.dim else "not-generating"
    return IharaVerdict(d, mod.dim, verdict)


# -- spherical action on the lattice module ---------------------------------------


def satake_module_action(z: LaurentPoly, m: LaurentPoly) -> LaurentPoly:
    """Action of a symmetric Laurent polynomial on the rank-one lattice
    module: plain multiplication, after checking symmetry."""
    if not is_symmetric(z):
        raise RingError("operator is not symmetric in the X variables")
    return z * m
