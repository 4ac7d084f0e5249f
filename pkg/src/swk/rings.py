"""Exact coefficient rings and sparse Laurent polynomial arithmetic.

Two kinds of coefficient ring, both with fully exact arithmetic:

* symbolic: the ring  Z[v^{+-1}, c_1, ..., c_{n-1}, c_n^{+-1}].
  The generator v is a formal square root of q (q := v^2), so half
  powers of q are honest monomials.  The Satake parameters c_1..c_n
  are polynomial generators except the last, which is inverted.

* prime-field: F_ell for a prime ell, carrying a chosen unit image of
  q, a chosen square root of that image, and n fixed parameter values
  c_1..c_n with c_n nonzero.

Elements (`RingElem`) and polynomials (`LaurentPoly`, Laurent in the
formal variables X_1..X_m over either ring) are immutable; arithmetic
returns new values and never rounds.  Canonical form stores no zero
coefficients; term order is graded lexicographic.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .errors import CapabilityError, RingError

__all__ = [
    "CoeffRing", "RingElem", "LaurentPoly",
    "make_ring", "is_prime", "glex_key", "is_symmetric",
]


def is_prime(m: int) -> bool:
    """Deterministic trial-division primality test (inputs here are small)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def glex_key(exps: tuple[int, ...]) -> tuple:
    """Sort key realizing graded-lex order: total degree, then lex."""
    return (sum(exps), exps)


class CoeffRing:
    """Handle for one of the two coefficient rings.

    Use the classmethods `symbolic` and `prime_field`; the constructor
    validates the data either way.

    >>> R = CoeffRing.symbolic(2)
    >>> (R.c(1) * R.c(2)) == (R.c(2) * R.c(1))
    True
    >>> F = CoeffRing.prime_field(2, ell=5, q=11, sqrt_q=1, c_values=[2, 3])
    >>> F.q_pow(1)
    RingElem(1)
    """

    def __init__(self, kind, n, ell=None, q=None, sqrt_q=None, c_values=None):
        if kind not in ("symbolic", "prime-field"):
            raise RingError(f"unknown ring kind {kind!r}")
        if n < 1:
            raise RingError("rank n must be positive")
        self.kind = kind
        self.n = n
        self.ngens = n + 1  # v, c_1, ..., c_n (symbolic exponent layout)
        if kind == "symbolic":
            if any(x is not None for x in (ell, q, sqrt_q, c_values)):
                raise RingError("symbolic ring takes no field data")
            self.ell = None
            self.q_image = None
            self.sqrt_q_image = None
            self.c_values = None
        else:
            if not is_prime(ell):
                raise RingError(f"ell={ell} is not prime")
            self.ell = ell
            if q is None or q % ell == 0:
                raise RingError("q must be a unit mod ell")
            self.q_image = q % ell
            if sqrt_q is None:
                self.sqrt_q_image = None
            else:
                s = sqrt_q % ell
                if (s * s) % ell != self.q_image:
                    raise RingError(
                        f"sqrt_q={sqrt_q} squares to {(s * s) % ell}, "
                        f"not q={self.q_image} mod {ell}")
                self.sqrt_q_image = s
            if c_values is None or len(c_values) != n:
                raise RingError(f"need exactly {n} parameter values c_1..c_n")
            cv = tuple(c % ell for c in c_values)
            if cv[-1] == 0:
                raise RingError("c_n must be invertible")
            self.c_values = cv

    @classmethod
    def symbolic(cls, n: int) -> "CoeffRing":
        return cls("symbolic", n)

    @classmethod
    def prime_field(cls, n, ell, q, sqrt_q=None, c_values=None) -> "CoeffRing":
        return cls("prime-field", n, ell=ell, q=q, sqrt_q=sqrt_q,
                   c_values=c_values)

    # -- capability flags ------------------------------------------------

    @property
    def has_sqrt_q(self) -> bool:
        return self.kind == "symbolic" or self.sqrt_q_image is not None

    def __eq__(self, other):
        if not isinstance(other, CoeffRing):
            return NotImplemented
        return (self.kind, self.n, self.ell, self.q_image,
                self.sqrt_q_image, self.c_values) == \
               (other.kind, other.n, other.ell, other.q_image,
                other.sqrt_q_image, other.c_values)

    def __repr__(self):
        if self.kind == "symbolic":
            return f"CoeffRing(symbolic, n={self.n})"
        return (f"CoeffRing(F_{self.ell}, n={self.n}, q={self.q_image}, "
                f"sqrt_q={self.sqrt_q_image}, c={list(self.c_values)})")

    # -- element constructors --------------------------------------------

    def from_int(self, k: int) -> "RingElem":
        if self.kind == "prime-field":
            return RingElem(self, k % self.ell)
        k = int(k)
        if k == 0:
            return RingElem(self, {})
        return RingElem(self, {(0,) * self.ngens: k})

    @property
    def zero(self) -> "RingElem":
        return self.from_int(0)

    @property
    def one(self) -> "RingElem":
        return self.from_int(1)

    def v_pow(self, k: int) -> "RingElem":
        """v^k; in a prime field this needs sqrt_q for odd k."""
        if self.kind == "symbolic":
            e = [0] * self.ngens
            e[0] = k
            return RingElem(self, {tuple(e): 1})
        if k % 2 == 0:
            return self.q_pow(k // 2)
        if self.sqrt_q_image is None:
            raise CapabilityError(
                "ring has no square root of q; supply sqrt_q")
        return RingElem(self, pow(self.sqrt_q_image, k % (self.ell - 1),
                                  self.ell))

    def q_pow(self, k: int) -> "RingElem":
        if self.kind == "symbolic":
            return self.v_pow(2 * k)
        return RingElem(self, pow(self.q_image, k % (self.ell - 1), self.ell))

    def c(self, j: int) -> "RingElem":
        """The parameter c_j, 1 <= j <= n."""
        if not 1 <= j <= self.n:
            raise RingError(f"c_{j} out of range for rank {self.n}")
        if self.kind == "symbolic":
            e = [0] * self.ngens
            e[j] = 1
            return RingElem(self, {tuple(e): 1})
        return RingElem(self, self.c_values[j - 1])

    def c_last_inv(self) -> "RingElem":
        """Inverse of c_n (always a unit by construction)."""
        if self.kind == "symbolic":
            e = [0] * self.ngens
            e[self.n] = -1
            return RingElem(self, {tuple(e): 1})
        return RingElem(self, pow(self.c_values[-1], self.ell - 2, self.ell))


def make_ring(kind, n, **kwargs) -> CoeffRing:
    """Build and validate a ring from raw descriptor fields."""
    return CoeffRing(kind, n, **kwargs)


def _validate_sym_exps(ring: CoeffRing, exps: tuple[int, ...]):
    if len(exps) != ring.ngens:
        raise RingError("exponent vector has wrong length")
    for b in exps[1:-1]:
        if b < 0:
            raise RingError(
                "negative exponent on a non-invertible generator c_j")


class RingElem:
    """An element of a `CoeffRing`.

    Symbolic payload: dict mapping exponent tuples over (v, c_1..c_n)
    to nonzero integers.  Prime-field payload: an int in [0, ell).
    """

    __slots__ = ("ring", "data")

    def __init__(self, ring: CoeffRing, data, _validate: bool = False):
        self.ring = ring
        if ring.kind == "prime-field":
            self.data = data % ring.ell
        else:
            if _validate:
                for e in data:
                    _validate_sym_exps(ring, e)
            self.data = {e: c for e, c in data.items() if c != 0}

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        if self.ring.kind == "prime-field":
            return self.data == 0
        return not self.data

    def is_one(self) -> bool:
        return self == self.ring.one

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.data == other.data

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, RingElem):
            if self.ring != other.ring:
                raise RingError("mixed-ring arithmetic")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ring.kind == "prime-field":
            return RingElem(self.ring, self.data + other.data)
        out = dict(self.data)
        for e, c in other.data.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return RingElem(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        if self.ring.kind == "prime-field":
            return RingElem(self.ring, -self.data)
        return RingElem(self.ring, {e: -c for e, c in self.data.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ring.kind == "prime-field":
            return RingElem(self.ring, self.data * other.data)
        out: dict = {}
        for e1, c1 in self.data.items():
            for e2, c2 in other.data.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return RingElem(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_unit_monomial(self) -> bool:
        """True for +-(v^a c_n^b), the units of the symbolic ring."""
        if self.ring.kind == "prime-field":
            return self.data != 0
        if len(self.data) != 1:
            return False
        (e, c), = self.data.items()
        return c in (1, -1) and all(x == 0 for x in e[1:-1])

    def inverse(self) -> "RingElem":
        if self.ring.kind == "prime-field":
            if self.data == 0:
                raise RingError("division by zero")
            return RingElem(self.ring, pow(self.data, self.ring.ell - 2,
                                           self.ring.ell))
        if not self.is_unit_monomial():
            raise RingError(f"{self} is not a unit of the symbolic ring")
        (e, c), = self.data.items()
        return RingElem(self.ring, {tuple(-x for x in e): c})

    # -- symbolic-only helpers ----------------------------------------------

    def has_even_v_powers(self) -> bool:
        """True when every monomial carries an even power of v.

        Formulas that are integral in q must satisfy this; a violation
        signals a lost or doubled half-power somewhere upstream.
        """
        if self.ring.kind == "prime-field":
            return True
        return all(e[0] % 2 == 0 for e in self.data)

    def specialize(self, target: CoeffRing) -> "RingElem":
        """Map a symbolic element to a prime field.

        Sends v to sqrt_q, c_j to the target's parameter values; this
        is the unique ring homomorphism extending those assignments.
        """
        if self.ring.kind != "symbolic":
            raise RingError("specialize applies to symbolic elements")
        if target.kind != "prime-field" or target.n != self.ring.n:
            raise RingError("specialization target must be a prime field "
                            "of the same rank")
        total = target.zero
        cs = [target.c(j) for j in range(1, target.n + 1)]
        cn_inv = target.c_last_inv()
        for e, coef in self.data.items():
            term = target.v_pow(e[0]) * coef
            for j, b in enumerate(e[1:], start=0):
                if b >= 0:
                    term = term * cs[j] ** b
                else:
                    term = term * cn_inv ** (-b)
            total = total + term
        return total

    # -- display -----------------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.data.items(), key=lambda t: glex_key(t[0]))

    def __repr__(self):
        if self.ring.kind == "prime-field":
            return f"RingElem({self.data})"
        if not self.data:
            return "RingElem(0)"
        names = ["v"] + [f"c{j}" for j in range(1, self.ring.n + 1)]
        parts = []
        for e, c in self._sorted_terms():
            facs = [f"{nm}^{x}" if x != 1 else nm
                    for nm, x in zip(names, e) if x != 0]
            if not facs:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(facs))
            elif c == -1:
                parts.append("-" + "*".join(facs))
            else:
                parts.append(f"{c}*" + "*".join(facs))
        return "RingElem(" + " + ".join(parts) + ")"


class LaurentPoly:
    """Sparse Laurent polynomial in formal variables X_1..X_m.

    Coefficients are `RingElem`s over a shared ring; exponent vectors
    are integer tuples of length `nvars` and may be negative.

    >>> R = CoeffRing.symbolic(2)
    >>> x1 = LaurentPoly.variable(R, 2, 0)
    >>> x2 = LaurentPoly.variable(R, 2, 1)
    >>> (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2
    True
    """

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring: CoeffRing, nvars: int, terms: dict):
        self.ring = ring
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring, nvars):
        return cls(ring, nvars, {})

    @classmethod
    def const(cls, ring, nvars, coeff) -> "LaurentPoly":
        if isinstance(coeff, int):
            coeff = ring.from_int(coeff)
        return cls(ring, nvars, {(0,) * nvars: coeff})

    @classmethod
    def one(cls, ring, nvars):
        return cls.const(ring, nvars, 1)

    @classmethod
    def monomial(cls, ring, nvars, exps, coeff=None) -> "LaurentPoly":
        if coeff is None:
            coeff = ring.one
        elif isinstance(coeff, int):
            coeff = ring.from_int(coeff)
        exps = tuple(exps)
        if len(exps) != nvars:
            raise RingError("exponent vector length mismatch")
        return cls(ring, nvars, {exps: coeff})

    @classmethod
    def variable(cls, ring, nvars, i) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(ring, nvars, e)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, RingElem)):
            other = LaurentPoly.const(self.ring, self.nvars,
                                      self.ring.from_int(other)
                                      if isinstance(other, int) else other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.ring == other.ring and self.nvars == other.nvars
                and self.terms == other.terms)

    def _check_compatible(self, other: "LaurentPoly"):
        if self.ring != other.ring:
            raise RingError("mixed-ring polynomial arithmetic")
        if self.nvars != other.nvars:
            raise RingError(
                f"variable-list mismatch: {self.nvars} vs {other.nvars}")

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.const(self.ring, self.nvars, other)
        if isinstance(other, RingElem):
            return LaurentPoly.const(self.ring, self.nvars, other)
        if isinstance(other, LaurentPoly):
            self._check_compatible(other)
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.ring, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, self.nvars,
                           {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.ring, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise RingError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            inv = LaurentPoly(self.ring, self.nvars,
                              {tuple(-x for x in e): c.inverse()})
            return inv ** (-k)
        result = LaurentPoly.one(self.ring, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure ------------------------------------------------------------

    def swap_vars(self, i: int, j: int) -> "LaurentPoly":
        """Image under the transposition of X_{i+1} and X_{j+1}."""
        out: dict = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i], le[j] = le[j], le[i]
            key = tuple(le)
            s = out.get(key)
            out[key] = c if s is None else s + c
        return LaurentPoly(self.ring, self.nvars, out)

    def map_coeffs(self, fn: Callable[[RingElem], RingElem],
                   new_ring: CoeffRing) -> "LaurentPoly":
        return LaurentPoly(new_ring, self.nvars,
                           {e: fn(c) for e, c in self.terms.items()})

    def divide_exact_linear(self, i: int, j: int) -> "LaurentPoly":
        """Exact quotient by (X_{i+1} - X_{j+1}).

        The dividend must be divisible (e.g. antisymmetric under the
        swap); classical synthetic division in the variable X_{i+1},
        coefficientwise in the remaining variables.  Raises if a
        nonzero remainder survives.
        """
        if self.is_zero():
            return self
        # collect by X_i degree, shifting so all X_i exponents are >= 0
        shift = min(e[i] for e in self.terms)
        by_deg: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = e[i] - shift
            rest = e[:i] + (0,) + e[i + 1:]
            by_deg.setdefault(d, {})[rest] = c
        top = max(by_deg)
        zero_row: dict = {}
        quot_rows: dict[int, dict] = {}
        carry = zero_row

        def row_add_mul_xj(row, other):
            # row + X_j * other, as exponent dicts with X_i slot zeroed
            out = dict(row)
            for e, c in other.items():
                e2 = list(e)
                e2[j] += 1
                e2 = tuple(e2)
                s = out.get(e2)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e2, None)
                else:
                    out[e2] = s
            return out

        for d in range(top, 0, -1):
            carry = row_add_mul_xj(by_deg.get(d, {}), carry)
            quot_rows[d - 1] = carry
        rem = row_add_mul_xj(by_deg.get(0, {}), carry)
        if any(not c.is_zero() for c in rem.values()):
            raise RingError("division by (X_i - X_j) is not exact")
        out: dict = {}
        for d, row in quot_rows.items():
            for e, c in row.items():
                e2 = list(e)
                e2[i] = d + shift
                out[tuple(e2)] = c
        return LaurentPoly(self.ring, self.nvars, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]))

    def specialize(self, target: CoeffRing) -> "LaurentPoly":
        return self.map_coeffs(lambda c: c.specialize(target), target)

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        parts = []
        for e, c in self.sorted_terms():
            facs = [f"X{k + 1}^{x}" if x != 1 else f"X{k + 1}"
                    for k, x in enumerate(e) if x != 0]
            mono = "*".join(facs) if facs else "1"
            parts.append(f"({c!r})*{mono}")
        return "LaurentPoly(" + " + ".join(parts) + ")"


def is_symmetric(f: LaurentPoly, blocks: Iterable[int] | None = None) -> bool:
    """Whether f is invariant under the block permutation group.

    `blocks` lists the sizes of a composition of nvars; the group is
    the product of symmetric groups permuting variables within each
    block (default: the full symmetric group).  Invariance is checked
    on the generating adjacent transpositions.
    """
    n = f.nvars
    if blocks is None:
        blocks = [n]
    blocks = list(blocks)
    if sum(blocks) != n:
        raise RingError(f"block sizes {blocks} do not sum to {n}")
    offset = 0
    for b in blocks:
        for i in range(offset, offset + b - 1):
            if f.swap_vars(i, i + 1) != f:
                return False
        offset += b
    return True
