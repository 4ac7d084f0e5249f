"""Weights, partitions, and Schur polynomials by two independent routes.

A weight is an integer n-tuple; a partition is a weakly decreasing
tuple of nonnegative parts.  Schur polynomials come from

* the bialternant quotient det(X_j^{mu_i + n - i}) / prod(X_i - X_j),
  computed with exact synthetic division, and

* the dual Jacobi-Trudi determinant det(E_{mu'_i - i + j}) over the
  abstract elementary generators E_1..E_n, evaluated by substitution.

Agreement of the two routes is one of the standing test suites.
"""

from __future__ import annotations

from itertools import permutations

from .errors import RingError
from .rings import CoeffRing, LaurentPoly

__all__ = [
    "Weight", "is_dominant", "weight_size", "conjugate",
    "dominant_weights_in_box", "elementary",
    "schur_bialternant", "schur_jacobi_trudi", "eval_in_elementary",
]

Weight = tuple[int, ...]


def is_dominant(mu: Weight) -> bool:
    """Weakly decreasing entries.

    >>> is_dominant((3, 1, 1)), is_dominant((0, 1))
    (True, False)
    """
    return all(a >= b for a, b in zip(mu, mu[1:]))


def weight_size(mu: Weight) -> int:
    return sum(mu)


def conjugate(parts: Weight) -> Weight:
    """Conjugate (transpose) partition, trailing zeros dropped.

    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate(conjugate((3, 1)))
    (3, 1)
    """
    if any(p < 0 for p in parts) or not is_dominant(parts):
        raise RingError(f"{parts} is not a partition")
    if not parts or parts[0] == 0:
        return ()
    return tuple(sum(1 for p in parts if p >= k)
                 for k in range(1, parts[0] + 1))


def dominant_weights_in_box(n: int, bound: int) -> list[Weight]:
    """All weakly decreasing mu with bound >= mu_1 >= ... >= mu_n >= -bound,
    in graded-lex order (by total size, then lexicographically)."""
    out: list[Weight] = []

    def rec(prefix, lo):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        hi = prefix[-1] if prefix else bound
        for x in range(hi, lo - 1, -1):
            rec(prefix + [x], lo)

    rec([], -bound)
    out.sort(key=lambda m: (sum(m), m))
    return out


def elementary(ring: CoeffRing, j: int, n: int) -> LaurentPoly:
    """Elementary symmetric polynomial e_j(X_1..X_n); e_0 = 1.

    >>> R = CoeffRing.symbolic(3)
    >>> len(elementary(R, 2, 3).terms)
    3
    """
    if not 0 <= j <= n:
        raise RingError(f"e_{j} undefined for {n} variables")
    terms: dict = {}
    one = ring.one

    def rec(start, chosen):
        if len(chosen) == j:
            e = [0] * n
            for k in chosen:
                e[k] = 1
            terms[tuple(e)] = one
            return
        for k in range(start, n - (j - len(chosen)) + 1):
            rec(k + 1, chosen + [k])

    rec(0, [])
    return LaurentPoly(ring, n, terms)


def schur_bialternant(ring: CoeffRing, mu: Weight) -> LaurentPoly:
    """Schur polynomial S_mu(X_1..X_n) as a bialternant quotient.

    mu must be dominant; negative entries are allowed and handled by
    S_mu = e_n^{mu_n} * S_{mu - mu_n*(1..1)}, so the result is Laurent.
    The Vandermonde division is exact at every step; no fractions.
    """
    mu = tuple(mu)
    if not is_dominant(mu):
        raise RingError(f"{mu} is not dominant")
    n = len(mu)
    shift = mu[-1]
    parts = tuple(m - shift for m in mu)
    # numerator det(X_j^{parts_i + n - i}) expanded over S_n
    exps = [parts[i] + n - 1 - i for i in range(n)]
    terms: dict = {}
    for sigma in permutations(range(n)):
        sign = _perm_sign(sigma)
        e = [0] * n
        for i in range(n):
            e[sigma[i]] += exps[i]
        key = tuple(e)
        c = terms.get(key, 0) + sign
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)
    f = LaurentPoly(ring, n, {e: ring.from_int(c) for e, c in terms.items()})
    for i in range(n):
        for j in range(i + 1, n):
            f = f.divide_exact_linear(i, j)
    if shift:
        en = LaurentPoly.monomial(ring, n, (1,) * n)
        f = f * en ** shift
    return f


def _perm_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def schur_jacobi_trudi(mu: Weight, n: int) -> dict[tuple[int, ...], int]:
    """S_mu written in the elementary generators E_1..E_n.

    Uses the dual (Naegelsbach-Kostka) determinant
    det(E_{mu'_i - i + j}), i,j = 1..mu_1, with E_0 = 1 and E_k = 0
    for k < 0 or k > n.  Returns an integer-coefficient polynomial as
    a sparse dict over E-exponent tuples of length n.

    >>> schur_jacobi_trudi((2, 0), 2) == {(2, 0): 1, (0, 1): -1}
    True
    """
    mu = tuple(mu)
    if any(p < 0 for p in mu):
        raise RingError("Jacobi-Trudi form needs a partition; "
                        "shift negative weights by e_n first")
    if len(mu) > n:
        raise RingError(f"partition {mu} has more than {n} parts")
    conj = conjugate(mu)
    m = mu[0] if mu else 0
    out: dict[tuple[int, ...], int] = {}
    if m == 0:
        out[(0,) * n] = 1
        return out
    # entry (i, j) of the determinant is E_{conj[i] - i + j} (0-based i, j)
    for sigma in permutations(range(m)):
        sign = _perm_sign(sigma)
        e = [0] * n
        ok = True
        for i in range(m):
            k = conj[i] - (i + 1) + (sigma[i] + 1)
            if k == 0:
                continue
            if k < 0 or k > n:
                ok = False
                break
            e[k - 1] += 1
        if not ok:
            continue
        key = tuple(e)
        c = out.get(key, 0) + sign
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return out


def eval_in_elementary(poly: dict[tuple[int, ...], int], args, one):
    """Substitute args for E_1..E_n in an integer E-polynomial.

    Works for any commutative arguments implementing + and * (ring
    elements, Laurent polynomials); `one` is the multiplicative
    identity of the target.
    """
    total = None
    for exps, coeff in sorted(poly.items()):
        term = one * coeff
        for a, k in zip(args, exps):
            if k:
                term = term * a ** k
        total = term if total is None else total + term
    if total is None:
        total = one * 0
    return total
