"""Small exact dense linear algebra over the coefficient rings.

Matrices are row-major lists of lists of `RingElem`.  Rank and span
computations over the symbolic ring are fraction-free (cross
multiplication with content stripping), so every intermediate value
stays in the ring; over a prime field ordinary elimination is used.
"""

from __future__ import annotations

from math import gcd

from .errors import DimensionError
from .rings import CoeffRing, RingElem

__all__ = ["mat_identity", "mat_scalar", "mat_mul", "mat_add", "mat_sub",
           "mat_scale", "mat_eq", "mat_apply", "is_zero_matrix",
           "SpanBasis"]


def mat_identity(ring: CoeffRing, d: int):
    return [[ring.one if i == j else ring.zero for j in range(d)]
            for i in range(d)]


def mat_scalar(ring: CoeffRing, d: int, r: RingElem):
    return [[r if i == j else ring.zero for j in range(d)]
            for i in range(d)]


def mat_mul(a, b):
    d, m = len(a), len(b[0])
    inner = len(b)
    if len(a[0]) != inner:
        raise DimensionError("matrix shape mismatch")
    out = []
    for i in range(d):
        row = []
        ai = a[i]
        for j in range(m):
            acc = None
            for k in range(inner):
                t = ai[k] * b[k][j]
                acc = t if acc is None else acc + t
            row.append(acc)
        out.append(row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, r):
    return [[r * x for x in row] for row in a]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def mat_apply(a, v):
    """Matrix times column vector."""
    if len(a[0]) != len(v):
        raise DimensionError("matrix/vector shape mismatch")
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            t = x * y
            acc = t if acc is None else acc + t
        out.append(acc)
    return out


def _strip_content(ring: CoeffRing, vec):
    """Divide a symbolic vector by its integer content and any common
    monomial; scaling by a nonzero ring element does not change the
    span over the fraction field."""
    if ring.kind == "prime-field":
        return vec
    g = 0
    mins = None
    for entry in vec:
        for e, c in entry.data.items():
            g = gcd(g, abs(c))
            if mins is None:
                mins = list(e)
            else:
                mins = [min(a, b) for a, b in zip(mins, e)]
    if mins is None:
        return vec
    if g == 0:
        g = 1
    # only strip polynomial generators down to zero; v and c_n slots
    # (first and last) are Laurent and may shift freely
    shift = list(mins)
    for k in range(1, len(shift) - 1):
        shift[k] = max(0, shift[k])
    if g == 1 and all(s == 0 for s in shift):
        return vec
    out = []
    for entry in vec:
        data = {tuple(a - b for a, b in zip(e, shift)): c // g
                for e, c in entry.data.items()}
        out.append(RingElem(ring, data))
    return out


class SpanBasis:
    """Incremental echelon basis of a subspace, exact over the ring's
    fraction field.

    `add(v)` reduces v against the current rows and either absorbs it
    (returns False) or installs a new pivot row (returns True).
    """

    def __init__(self, ring: CoeffRing, dim: int):
        self.ring = ring
        self.dim = dim
        self.rows: list[tuple[int, list]] = []  # (pivot index, vector)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v):
        field = self.ring.kind == "prime-field"
        for pc, row in self.rows:
            coef = v[pc]
            if coef.is_zero():
                continue
            if field:
                factor = coef * row[pc].inverse()
                v = [x - factor * y for x, y in zip(v, row)]
            else:
                piv = row[pc]
                v = [piv * x - coef * y for x, y in zip(v, row)]
                v = _strip_content(self.ring, v)
        return v

    def add(self, v) -> bool:
        if len(v) != self.dim:
            raise DimensionError("vector has wrong dimension")
        v = self._reduce(list(v))
        for idx, x in enumerate(v):
            if not x.is_zero():
                v = _strip_content(self.ring, v)
                self.rows.append((idx, v))
                self.rows.sort(key=lambda t: t[0])
                return True
        return False

    def contains(self, v) -> bool:
        return all(x.is_zero() for x in self._reduce(list(v)))
