"""The extended affine Hecke algebra of GL_n in two presentations.

Coset basis (`HeckeElemIM`): free module on the extended affine
symmetric group, with T_x T_s = T_{xs} when the length goes up and
T_x T_s = q T_{xs} + (q-1) T_x when it goes down, for every simple
reflection including the affine one; multiplying by a length-zero
rotation is free.  The quadratic normalization is
T_s^2 = (q-1) T_s + q, the one for which w |-> q^{l(w)} is a
character of the finite subalgebra.

Translation basis (`HeckeElemB`): sums f_sigma(X) T_sigma over the
finite symmetric group with Laurent-polynomial coefficients, where
X^mu is the normalized image of the lattice:

    X^mu = q^{-l(t_mu')/2} T_{t_mu'} * (q^{-l(t_mu'')/2} T_{t_mu''})^{-1}

for any splitting mu = mu' - mu'' into dominant weights (the map
nu |-> q^{-l(t_nu)/2} T_{t_nu} is multiplicative on dominants, so the
splitting does not matter).  Products are normalized with the
divided-difference commutation

    S_i f = (s_i f) S_i + (q-1) (f - s_i f) X_i / (X_i - X_{i+1}),

whose correction term is always an honest Laurent polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import ExtAffPerm
from .errors import CapabilityError, DimensionError, RingError
from .rings import CoeffRing, LaurentPoly, RingElem, is_symmetric
from .symfun import Weight, elementary, is_dominant

__all__ = [
    "HeckeElemIM", "HeckeElemB",
    "im_basis", "im_simple", "im_shift", "im_one", "im_invert_translation",
    "bern_one", "bern_x", "bern_simple", "bern_basis",
    "x_monomial", "im_to_bern", "bern_to_im", "symmetric_in_x",
    "divided_correction",
    "satake_spherical", "is_central", "trivial_char",
    "levi_embed_factor", "levi_embed",
]


def _need_sqrt(ring: CoeffRing):
    if not ring.has_sqrt_q:
        raise CapabilityError("operation needs half powers of q; the ring "
                              "carries no square root of q")


@dataclass(frozen=True)
class HeckeElemIM:
    """Element in the coset basis: finite map ExtAffPerm -> scalar."""

    ring: CoeffRing
    n: int
    terms: dict

    def __post_init__(self):
        object.__setattr__(
            self, "terms",
            {w: c for w, c in self.terms.items() if not c.is_zero()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HeckeElemIM):
            return NotImplemented
        return (self.ring == other.ring and self.n == other.n
                and self.terms == other.terms)

    def _check(self, other: "HeckeElemIM"):
        if self.ring != other.ring or self.n != other.n:
            raise RingError("mixed-algebra arithmetic")

    def __add__(self, other):
        if isinstance(other, HeckeElemIM):
            self._check(other)
            out = dict(self.terms)
            for w, c in other.terms.items():
                s = out.get(w)
                out[w] = c if s is None else s + c
            return HeckeElemIM(self.ring, self.n, out)
        return NotImplemented

    def __neg__(self):
        return HeckeElemIM(self.ring, self.n,
                           {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, HeckeElemIM):
            return self + (-other)
        return NotImplemented

    def scale(self, r) -> "HeckeElemIM":
        if isinstance(r, int):
            r = self.ring.from_int(r)
        return HeckeElemIM(self.ring, self.n,
                           {w: r * c for w, c in self.terms.items()})

    def __mul__(self, other):
        """Product, reducing the right factor to a reduced word."""
        if isinstance(other, (int, RingElem)):
            return self.scale(other)
        if not isinstance(other, HeckeElemIM):
            return NotImplemented
        self._check(other)
        out = HeckeElemIM(self.ring, self.n, {})
        for y, cy in other.terms.items():
            steps, word = y.reduced_word()
            cur = self._mul_rotation(steps).scale(cy)
            for i in word:
                cur = cur._mul_simple(i)
            out = out + cur
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, RingElem)):
            return self.scale(other)
        return NotImplemented

    def _mul_rotation(self, steps: int) -> "HeckeElemIM":
        if steps == 0:
            return self
        rot = ExtAffPerm.shift(self.n, steps)
        return HeckeElemIM(self.ring, self.n,
                           {w * rot: c for w, c in self.terms.items()})

    def _mul_simple(self, i: int) -> "HeckeElemIM":
        """Right multiplication by T_{s_i} (i may be 0)."""
        ring = self.ring
        q = ring.q_pow(1)
        qm1 = q - ring.one
        out: dict = {}

        def bump(w, c):
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s

        for w, c in self.terms.items():
            ws = w.mul_simple_right(i)
            if ws.length() > w.length():
                bump(ws, c)
            else:
                bump(ws, q * c)
                bump(w, qm1 * c)
        return HeckeElemIM(self.ring, self.n, out)

    def pow(self, k: int) -> "HeckeElemIM":
        if k < 0:
            raise RingError("use explicit inverses for negative powers")
        out = im_one(self.ring, self.n)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (t[0].length(), t[0].window))

    def __repr__(self):
        if not self.terms:
            return "HeckeElemIM(0)"
        bits = [f"({c!r})*T{list(w.window)}" for w, c in self.sorted_terms()]
        return "HeckeElemIM(" + " + ".join(bits) + ")"


def im_basis(ring: CoeffRing, n: int, w: ExtAffPerm) -> HeckeElemIM:
    return HeckeElemIM(ring, n, {w: ring.one})


def im_one(ring: CoeffRing, n: int) -> HeckeElemIM:
    return im_basis(ring, n, ExtAffPerm.identity(n))


def im_simple(ring: CoeffRing, n: int, i: int) -> HeckeElemIM:
    """S_i = T_{s_i}; i = 0 gives the affine reflection."""
    return im_basis(ring, n, ExtAffPerm.simple(n, i))


def im_shift(ring: CoeffRing, n: int, steps: int = 1) -> HeckeElemIM:
    """The invertible length-zero generator T (and its powers)."""
    return im_basis(ring, n, ExtAffPerm.shift(n, steps))


def _im_simple_inverse(ring: CoeffRing, n: int, i: int) -> HeckeElemIM:
    # T_s^{-1} = q^{-1} T_s - (1 - q^{-1}) T_e
    qinv = ring.q_pow(-1)
    return (im_simple(ring, n, i).scale(qinv)
            + im_one(ring, n).scale(qinv - ring.one))


def im_invert_translation(ring: CoeffRing, n: int, mu: Weight) -> HeckeElemIM:
    """Inverse of T_{t_mu} for dominant mu.

    Back-substitution along a reduced word t_mu = rot * s_{i_1}..s_{i_k}:
    the inverse is the reversed product of the T_{s_i}^{-1} and the
    inverse rotation, so the only divisions are by q.
    """
    if not is_dominant(mu):
        raise RingError(f"{mu} is not dominant; this coset basis element "
                        "need not be invertible")
    steps, word = ExtAffPerm.translation(mu).reduced_word()
    out = im_one(ring, n)
    for i in reversed(word):
        out = out * _im_simple_inverse(ring, n, i)
    return out._mul_rotation(-steps)


@dataclass(frozen=True)
class HeckeElemB:
    """Element in the translation basis: map S_n -> Laurent polynomial.

    Keys are finite permutations as window tuples; the value at sigma
    is the coefficient f_sigma(X_1..X_n) of T_sigma.
    """

    ring: CoeffRing
    n: int
    terms: dict

    def __post_init__(self):
        object.__setattr__(
            self, "terms",
            {s: f for s, f in self.terms.items() if not f.is_zero()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HeckeElemB):
            return NotImplemented
        return (self.ring == other.ring and self.n == other.n
                and self.terms == other.terms)

    def _check(self, other: "HeckeElemB"):
        if self.ring != other.ring or self.n != other.n:
            raise RingError("mixed-algebra arithmetic")

    def __add__(self, other):
        if isinstance(other, HeckeElemB):
            self._check(other)
            out = dict(self.terms)
            for s, f in other.terms.items():
                g = out.get(s)
                g = f if g is None else g + f
                if g.is_zero():
                    out.pop(s, None)
                else:
                    out[s] = g
            return HeckeElemB(self.ring, self.n, out)
        return NotImplemented

    def __neg__(self):
        return HeckeElemB(self.ring, self.n,
                          {s: -f for s, f in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, HeckeElemB):
            return self + (-other)
        return NotImplemented

    def scale_poly(self, f: LaurentPoly) -> "HeckeElemB":
        """Left multiplication by a Laurent polynomial in the X's."""
        return HeckeElemB(self.ring, self.n,
                          {s: f * g for s, g in self.terms.items()})

    def scale(self, r) -> "HeckeElemB":
        if isinstance(r, int):
            r = self.ring.from_int(r)
        return self.scale_poly(LaurentPoly.const(self.ring, self.n, r))

    def __mul__(self, other):
        if isinstance(other, (int, RingElem)):
            return self.scale(other)
        if not isinstance(other, HeckeElemB):
            return NotImplemented
        self._check(other)
        out = HeckeElemB(self.ring, self.n, {})
        for sigma, f in self.terms.items():
            moved = _left_mul_finite(sigma, other)
            out = out + moved.scale_poly(f)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, RingElem)):
            return self.scale(other)
        return NotImplemented

    def pow(self, k: int) -> "HeckeElemB":
        if k < 0:
            raise RingError("negative powers not supported here")
        out = bern_one(self.ring, self.n)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (ExtAffPerm(t[0]).length(), t[0]))

    def __repr__(self):
        if not self.terms:
            return "HeckeElemB(0)"
        bits = [f"[{f!r}]*T{list(s)}" for s, f in self.sorted_terms()]
        return "HeckeElemB(" + " + ".join(bits) + ")"


def bern_one(ring: CoeffRing, n: int) -> HeckeElemB:
    ident = tuple(range(1, n + 1))
    return HeckeElemB(ring, n, {ident: LaurentPoly.one(ring, n)})


def bern_basis(ring: CoeffRing, n: int, sigma, f=None) -> HeckeElemB:
    if f is None:
        f = LaurentPoly.one(ring, n)
    return HeckeElemB(ring, n, {tuple(sigma): f})


def bern_x(ring: CoeffRing, n: int, mu: Weight) -> HeckeElemB:
    """The translation monomial X^mu as a basis element."""
    ident = tuple(range(1, n + 1))
    return HeckeElemB(ring, n,
                      {ident: LaurentPoly.monomial(ring, n, mu)})


def bern_simple(ring: CoeffRing, n: int, i: int) -> HeckeElemB:
    """S_i (1 <= i <= n-1) in the translation basis."""
    if not 1 <= i <= n - 1:
        raise RingError(f"S_{i} out of range")
    sigma = list(range(1, n + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return bern_basis(ring, n, sigma)


def divided_correction(f: LaurentPoly, i: int) -> LaurentPoly:
    """(f - s_i f) * X_{i+1-index i} / (X_i - X_{i+1}), exactly."""
    g = f - f.swap_vars(i - 1, i)
    if g.is_zero():
        return g
    xi = LaurentPoly.variable(f.ring, f.nvars, i - 1)
    return (g * xi).divide_exact_linear(i - 1, i)


def _left_mul_simple(i: int, elem: HeckeElemB) -> HeckeElemB:
    """S_i * elem via the commutation rule."""
    ring = elem.ring
    n = elem.n
    q = ring.q_pow(1)
    qm1 = q - ring.one
    out = HeckeElemB(ring, n, {})
    for tau, g in elem.terms.items():
        swapped = g.swap_vars(i - 1, i)
        corr = divided_correction(g, i)
        # (s_i g) T_{s_i} T_tau
        t = ExtAffPerm(tau)
        st = ExtAffPerm.simple(n, i) * t
        if st.length() > t.length():
            part = HeckeElemB(ring, n, {st.window: swapped})
        else:
            part = HeckeElemB(ring, n, {
                st.window: LaurentPoly.const(ring, n, q) * swapped,
                tau: LaurentPoly.const(ring, n, qm1) * swapped,
            })
        if not corr.is_zero():
            part = part + HeckeElemB(
                ring, n, {tau: LaurentPoly.const(ring, n, qm1) * corr})
        out = out + part
    return out


def _left_mul_finite(sigma, elem: HeckeElemB) -> HeckeElemB:
    """T_sigma * elem for a finite permutation window sigma."""
    w = ExtAffPerm(tuple(sigma))
    _, word = w.reduced_word()
    out = elem
    for i in reversed(word):
        out = _left_mul_simple(i, out)
    return out


# -- lattice embedding and base change ---------------------------------------


def _staircase_split(mu: Weight) -> tuple[Weight, Weight]:
    """mu = mu' - mu'' with both dominant.

    mu'' is a multiple of the staircase (n-1, ..., 1, 0), the smallest
    multiple making mu + mu'' dominant.
    """
    n = len(mu)
    m = max([0] + [mu[i + 1] - mu[i] for i in range(n - 1)])
    stair = tuple(m * (n - 1 - i) for i in range(n))
    return tuple(a + b for a, b in zip(mu, stair)), stair


def x_monomial(ring: CoeffRing, mu: Weight) -> HeckeElemIM:
    """Image of the lattice point mu in the coset basis.

    Computed as q^{-l'/2} T_{t_mu'} * (q^{-l''/2} T_{t_mu''})^{-1} over
    the staircase splitting; each dominant factor carries its own
    length normalization, which is what makes the map multiplicative
    and sends the j-th standard basis weight to X_j.
    """
    _need_sqrt(ring)
    n = len(mu)
    mu = tuple(mu)
    if all(m == 0 for m in mu):
        return im_one(ring, n)
    up, down = _staircase_split(mu)
    lu = ExtAffPerm.translation(up).length()
    pos = im_basis(ring, n, ExtAffPerm.translation(up)).scale(ring.v_pow(-lu))
    if all(m == 0 for m in down):
        return pos
    ld = ExtAffPerm.translation(down).length()
    neg = im_invert_translation(ring, n, down).scale(ring.v_pow(ld))
    return pos * neg


def bern_to_im(elem: HeckeElemB) -> HeckeElemIM:
    """Expand X^mu T_sigma terms through the lattice embedding."""
    _need_sqrt(elem.ring)
    ring, n = elem.ring, elem.n
    out = HeckeElemIM(ring, n, {})
    for sigma, f in elem.terms.items():
        base = im_basis(ring, n, ExtAffPerm(sigma))
        for mu, coeff in f.sorted_terms():
            out = out + (x_monomial(ring, mu) * base).scale(coeff)
    return out


def im_to_bern(elem: HeckeElemIM) -> HeckeElemB:
    """Inverse base change, peeling maximal-length coset terms.

    bern_to_im(X^mu T_sigma) has unique longest term T_{t_mu sigma}
    with unit coefficient, and everything else strictly shorter, so
    subtracting matched monomials terminates.
    """
    _need_sqrt(elem.ring)
    ring, n = elem.ring, elem.n
    residue = elem
    out = HeckeElemB(ring, n, {})
    guard = 0
    while not residue.is_zero():
        guard += 1
        if guard > 10000:
            raise RingError("base-change failed to terminate")
        w, coeff = max(residue.terms.items(),
                       key=lambda t: (t[0].length(), t[0].window))
        mu, sigma = w.to_parts()
        probe = HeckeElemB(ring, n,
                           {sigma: LaurentPoly.monomial(ring, n, mu)})
        image = bern_to_im(probe)
        lead = image.terms.get(w)
        if lead is None:
            raise RingError("expected leading coset term is missing")
        ratio = coeff * lead.inverse()
        out = out + probe.scale(ratio)
        residue = residue - image.scale(ratio)
    return out


# -- distinguished elements and maps ------------------------------------------


def satake_spherical(ring: CoeffRing, j: int, n: int) -> LaurentPoly:
    """Image of the j-th spherical generator in the symmetric center:
    q^{-j(j-1)/2} e_j(X_1..X_n)."""
    if not 1 <= j <= n:
        raise RingError(f"generator index {j} out of range")
    return elementary(ring, j, n) * ring.q_pow(-(j * (j - 1) // 2))


def is_central(elem: HeckeElemB) -> bool:
    """Commutation with S_1..S_{n-1} and X_1 detects the center,
    which is exactly the symmetric Laurent polynomials."""
    n = elem.n
    gens = [bern_simple(elem.ring, n, i) for i in range(1, n)]
    gens.append(bern_x(elem.ring, n, tuple([1] + [0] * (n - 1))))
    return all(g * elem == elem * g for g in gens)


def trivial_char(elem: HeckeElemB) -> RingElem:
    """The index character on the finite subalgebra: T_sigma |-> q^{l(sigma)}.

    Input must be supported on finite permutations with constant
    coefficients.
    """
    ring = elem.ring
    total = ring.zero
    const = (0,) * elem.n
    for sigma, f in elem.terms.items():
        for e, c in f.terms.items():
            if e != const:
                raise RingError("element is not in the finite subalgebra")
            total = total + c * ring.q_pow(ExtAffPerm(sigma).length())
    return total


def levi_embed_factor(ring: CoeffRing, blocks: list[int], index: int,
                      elem: HeckeElemB) -> HeckeElemB:
    """Embed a factor algebra of a block product by index shifts.

    X_j of factor `index` goes to X_{offset+j} and S_j to S_{offset+j},
    offset = n_1 + ... + n_{index-1}; this is the unique algebra map
    doing so.
    """
    n = sum(blocks)
    if not 0 <= index < len(blocks):
        raise DimensionError("block index out of range")
    if elem.n != blocks[index]:
        raise DimensionError(
            f"element rank {elem.n} does not match block {blocks[index]}")
    if elem.ring != ring:
        raise RingError("factor element must share the ambient ring")
    offset = sum(blocks[:index])
    out: dict = {}
    for sigma, f in elem.terms.items():
        big = list(range(1, n + 1))
        for k, v in enumerate(sigma):
            big[offset + k] = offset + v
        newf_terms = {}
        for e, c in f.terms.items():
            bige = [0] * n
            bige[offset:offset + elem.n] = e
            newf_terms[tuple(bige)] = c
        key = tuple(big)
        poly = LaurentPoly(ring, n, newf_terms)
        got = out.get(key)
        out[key] = poly if got is None else got + poly
    return HeckeElemB(ring, n, out)


def levi_embed(ring: CoeffRing, blocks: list[int],
               factors: list[HeckeElemB]) -> HeckeElemB:
    """Product of the factor embeddings (image of a pure tensor)."""
    if len(factors) != len(blocks):
        raise DimensionError("one factor element per block required")
    n = sum(blocks)
    out = bern_one(ring, n)
    for idx, elem in enumerate(factors):
        out = out * levi_embed_factor(ring, blocks, idx, elem)
    return out


def symmetric_in_x(elem: HeckeElemB) -> bool:
    """Supported on the identity with a fully symmetric coefficient."""
    ident = tuple(range(1, elem.n + 1))
    if set(elem.terms) - {ident}:
        return False
    if not elem.terms:
        return True
    return is_symmetric(elem.terms[ident])
