"""Spherical Whittaker values by closed formula and by recursion.

A Hecke character lambda assigns a scalar to each of the n standard
spherical generators; the normalized spherical Whittaker function
with value 1 at the identity has

    W(mu) = q^{sum_i (i-n) mu_i} * S_mu(a_1, ..., a_n),
    a_j = q^{j(j-1)/2} * lambda_j,

on dominant mu, and vanishes elsewhere.  `whittaker_value` implements
this via the Jacobi-Trudi route; `recursion_solve` independently
reconstructs the whole table on a box from the defining recursion

    q^{j(j-1)/2} lambda_j Wt(mu) = sum_{eps in I(j)} Wt(mu + eps),

for the renormalization Wt(mu) = q^{sum (n-i) mu_i} W(mu), where I(j)
is the set of 0/1 vectors with j ones.  The two routes never share
code past the coefficient ring, so each is an oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (BoundExhausted, DimensionError,
                     InconsistentSystemError, RingError)
from .rings import CoeffRing, RingElem
from .symfun import (Weight, dominant_weights_in_box, eval_in_elementary,
                     is_dominant, schur_jacobi_trudi)

__all__ = [
    "HeckeChar", "WhittakerTable", "whittaker_value", "recursion_solve",
    "hecke_apply", "whittaker_levi", "ev1",
]


@dataclass(frozen=True)
class HeckeChar:
    """Values lambda_1..lambda_n of a character of the spherical algebra.

    The last value must be invertible; its inverse is supplied (or
    derived for the canonical constructions) so that no computation
    ever divides by a non-unit.
    """

    ring: CoeffRing
    values: tuple[RingElem, ...]
    inv_last: RingElem

    def __post_init__(self):
        if not self.values:
            raise RingError("need at least one character value")
        if not (self.values[-1] * self.inv_last).is_one():
            raise RingError("inv_last is not the inverse of the last value")

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def generic(cls, ring: CoeffRing) -> "HeckeChar":
        """lambda_j = c_j, the tautological character of the ring."""
        vals = tuple(ring.c(j) for j in range(1, ring.n + 1))
        return cls(ring, vals, ring.c_last_inv())

    def schur_args(self) -> list[RingElem]:
        """The shifted arguments a_j = q^{j(j-1)/2} lambda_j."""
        return [self.ring.q_pow(j * (j - 1) // 2) * self.values[j - 1]
                for j in range(1, self.n + 1)]

    def specialize(self, target: CoeffRing) -> "HeckeChar":
        vals = tuple(v.specialize(target) for v in self.values)
        return HeckeChar(target, vals, self.inv_last.specialize(target))


@dataclass(frozen=True)
class WhittakerTable:
    """Finite map from the dominant weights of a box to ring values.

    The box is {mu dominant : bound >= mu_1 >= ... >= mu_n >= -bound};
    the function is implicitly zero off the dominant cone.
    """

    char: HeckeChar
    bound: int
    entries: dict

    @property
    def ring(self) -> CoeffRing:
        return self.char.ring

    @property
    def n(self) -> int:
        return self.char.n

    def value(self, mu: Weight) -> RingElem:
        if not is_dominant(mu):
            return self.ring.zero
        try:
            return self.entries[tuple(mu)]
        except KeyError:
            raise BoundExhausted(f"{mu} outside the stored box "
                                 f"(bound {self.bound})") from None

    def weights(self) -> list[Weight]:
        return dominant_weights_in_box(self.n, self.bound)

    def scale(self, r: RingElem) -> "WhittakerTable":
        return WhittakerTable(self.char, self.bound,
                              {m: r * v for m, v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, WhittakerTable):
            return NotImplemented
        return (self.char == other.char and self.bound == other.bound
                and self.entries == other.entries)

    def is_normalized(self) -> bool:
        origin = (0,) * self.n
        return origin in self.entries and self.entries[origin].is_one()


def whittaker_value(char: HeckeChar, mu: Weight) -> RingElem:
    """Closed-formula value W(mu); zero off the dominant cone.

    Negative entries are routed through the invertible last parameter:
    S_mu = a_n^{mu_n} * S_{mu - mu_n*(1,..,1)} with the shifted weight
    a partition, so only integral powers of a_n^{+-1} appear.
    """
    mu = tuple(mu)
    ring = char.ring
    if not is_dominant(mu):
        return ring.zero
    n = char.n
    shift = mu[-1]
    parts = tuple(m - shift for m in mu)
    args = char.schur_args()
    jt = schur_jacobi_trudi(parts, n)
    val = eval_in_elementary(jt, args, ring.one)
    if shift >= 0:
        an_pow = args[-1] ** shift
    else:
        an_inv = ring.q_pow(-(n * (n - 1) // 2)) * char.inv_last
        an_pow = an_inv ** (-shift)
    prefactor = ring.q_pow(sum((i - n) * mu[i - 1] for i in range(1, n + 1)))
    out = prefactor * an_pow * val
    assert out.has_even_v_powers(), "integral-q formula produced half powers"
    return out


def _epsilons(n: int, j: int) -> list[tuple[int, ...]]:
    """I(j): 0/1 vectors of length n with exactly j ones."""
    out = []
    for pos in combinations(range(n), j):
        e = [0] * n
        for p in pos:
            e[p] = 1
        out.append(tuple(e))
    return out


def recursion_solve(char: HeckeChar, bound: int) -> WhittakerTable:
    """Solve the defining recursion on a box; independent of Schur.

    Unknowns Wt(mu) are eliminated greedily in (size, lex) order:
    a weight with mu_n = 0 and j positive entries is produced by the
    level-j relation based at mu - (1^j, 0...), whose other terms are
    lexicographically smaller; a weight with mu_n != 0 reduces along
    the j = n relation, dividing only by the invertible q^{n(n-1)/2}
    lambda_n.  Every remaining relation instance inside the box is
    then checked as a residual; the recursion determines the table
    uniquely, so a nonzero residual is an implementation bug.
    """
    if bound < 0:
        raise DimensionError("bound must be >= 0")
    ring = char.ring
    n = char.n
    lam = char.values
    top = ring.q_pow(n * (n - 1) // 2) * lam[-1]
    top_inv = ring.q_pow(-(n * (n - 1) // 2)) * char.inv_last

    # Wt on the cone {dominant, mu_n = 0, mu_1 <= 2*bound}; weights with
    # mu_n != 0 reduce to it by peeling copies of (1,..,1).
    memo: dict[tuple[int, ...], RingElem] = {(0,) * n: ring.one}

    def wt_reduced(mu: tuple[int, ...]) -> RingElem:
        # mu dominant, mu_n = 0
        got = memo.get(mu)
        if got is not None:
            return got
        j = sum(1 for m in mu if m > 0)
        base = tuple(m - 1 if k < j else m for k, m in enumerate(mu))
        total = ring.q_pow(j * (j - 1) // 2) * lam[j - 1] * wt(base)
        lead = tuple(m + 1 if k < j else m for k, m in enumerate(base))
        for eps in _epsilons(n, j):
            nu = tuple(b + e for b, e in zip(base, eps))
            if nu == lead or not is_dominant(nu):
                continue
            total = total - wt(nu)
        memo[mu] = total
        return total

    def wt(mu: tuple[int, ...]) -> RingElem:
        if not is_dominant(mu):
            return ring.zero
        s = mu[-1]
        if s == 0:
            return wt_reduced(mu)
        red = tuple(m - s for m in mu)
        return (top ** s if s > 0 else top_inv ** (-s)) * wt_reduced(red)

    entries: dict[tuple[int, ...], RingElem] = {}
    for mu in dominant_weights_in_box(n, bound):
        norm = ring.q_pow(sum((i - n) * mu[i - 1] for i in range(1, n + 1)))
        entries[mu] = norm * wt(mu)

    table = WhittakerTable(char, bound, entries)
    _verify_recursion(table, wt)
    return table


def _verify_recursion(table: WhittakerTable, wt) -> None:
    ring = table.ring
    n = table.n
    lam = table.char.values
    for mu in table.weights():
        if mu[0] >= table.bound:
            continue  # mu + eps can leave the box
        for j in range(1, n + 1):
            lhs = ring.q_pow(j * (j - 1) // 2) * lam[j - 1] * wt(mu)
            rhs = ring.zero
            for eps in _epsilons(n, j):
                rhs = rhs + wt(tuple(m + e for m, e in zip(mu, eps)))
            if lhs != rhs:
                raise InconsistentSystemError(
                    f"recursion residual at mu={mu}, j={j}")


def hecke_apply(j: int, table: WhittakerTable) -> WhittakerTable:
    """Apply the j-th spherical operator to a value table.

    (T_j * W)(mu) = q^{-j(j-1)/2} sum_{eps in I(j)}
                      q^{sum_i (n-i) eps_i} W(mu + eps)
    on dominant mu; the result lives on the box shrunk by one.  On an
    eigen-table this returns lambda_j times the restriction, which is
    the correctness oracle for the exponents.
    """
    n = table.n
    if not 1 <= j <= n:
        raise DimensionError(f"operator index {j} out of range")
    if table.bound < 1:
        raise BoundExhausted("table bound exhausted by the operator")
    ring = table.ring
    pref = ring.q_pow(-(j * (j - 1) // 2))
    entries: dict[tuple[int, ...], RingElem] = {}
    for mu in dominant_weights_in_box(n, table.bound - 1):
        acc = ring.zero
        for eps in _epsilons(n, j):
            nu = tuple(m + e for m, e in zip(mu, eps))
            if not is_dominant(nu):
                continue
            w = ring.q_pow(sum((n - i) * eps[i - 1] for i in range(1, n + 1)))
            acc = acc + w * table.value(nu)
        entries[mu] = pref * acc
    return WhittakerTable(table.char, table.bound - 1, entries)


def whittaker_levi(block_chars: list[HeckeChar], mu: Weight) -> RingElem:
    """Blockwise Whittaker value for a product of smaller groups.

    mu splits into consecutive segments matching the block ranks; the
    value is the product of the per-block values, hence zero unless
    every segment is dominant.
    """
    if not block_chars:
        raise DimensionError("need at least one block")
    ring = block_chars[0].ring
    sizes = [ch.n for ch in block_chars]
    if sum(sizes) != len(mu):
        raise DimensionError(
            f"block sizes {sizes} do not sum to len(mu)={len(mu)}")
    total = ring.one
    pos = 0
    for ch in block_chars:
        if ch.ring != ring:
            raise RingError("blocks must share one coefficient ring")
        seg = tuple(mu[pos:pos + ch.n])
        pos += ch.n
        total = total * whittaker_value(ch, seg)
        if total.is_zero():
            return ring.zero
    return total


def ev1(table: WhittakerTable) -> RingElem:
    """Value at the origin (the identity coset)."""
    origin = (0,) * table.n
    return table.value(origin)
