"""Deterministic JSON encoding of rings, elements, tables, and modules.

Conventions: scalar values (coefficients, field data) are decimal
strings so no consumer has to guess integer widths; structural counts
(ranks, bounds, dimensions, exponents inside keys) are plain JSON
ints.  Sparse maps are emitted with keys in graded-lex order, making
repeated encodings byte-identical.

Key grammar: an exponent vector (e_1, ..., e_k) becomes the string
"e_1,...,e_k".  Symbolic ring elements are maps over (v, c_1..c_n)
exponent keys; prime-field elements are bare decimal strings; Laurent
polynomials are maps from X-exponent keys to ring-element documents.
"""

from __future__ import annotations

from .affine import ExtAffPerm
from .errors import SchemaError
from .hecke import HeckeElemB, HeckeElemIM
from .module import UnramifiedModule
from .rings import CoeffRing, LaurentPoly, RingElem, glex_key
from .whittaker import HeckeChar, WhittakerTable

__all__ = [
    "encode_ring", "decode_ring", "encode_elem", "decode_elem",
    "encode_laurent", "decode_laurent", "encode_char", "decode_char",
    "encode_table", "encode_im", "decode_im", "encode_bern", "decode_bern",
    "encode_module", "weight_key", "parse_weight_key",
]


def weight_key(exps) -> str:
    return ",".join(str(x) for x in exps)


def parse_weight_key(key: str, length: int | None = None) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in key.split(","))
    except ValueError:
        raise SchemaError(f"bad exponent key {key!r}") from None
    if length is not None and len(out) != length:
        raise SchemaError(f"exponent key {key!r} should have {length} entries")
    return out


def _int_field(doc, name, optional=False):
    v = doc.get(name)
    if v is None:
        if optional:
            return None
        raise SchemaError(f"missing field {name!r}")
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise SchemaError(f"field {name!r} must be an int or decimal string")
    try:
        return int(v)
    except ValueError:
        raise SchemaError(f"field {name!r} is not an integer") from None


# -- rings ---------------------------------------------------------------------


def encode_ring(ring: CoeffRing) -> dict:
    if ring.kind == "symbolic":
        return {"kind": "symbolic", "n": ring.n}
    doc = {"kind": "prime-field", "n": ring.n, "ell": str(ring.ell),
           "q": str(ring.q_image)}
    if ring.sqrt_q_image is not None:
        doc["sqrt_q"] = str(ring.sqrt_q_image)
    doc["c"] = [str(c) for c in ring.c_values]
    return doc


def decode_ring(doc) -> CoeffRing:
    if not isinstance(doc, dict):
        raise SchemaError("ring descriptor must be an object")
    kind = doc.get("kind")
    n = _int_field(doc, "n")
    from .errors import RingError
    try:
        if kind == "symbolic":
            return CoeffRing.symbolic(n)
        if kind == "prime-field":
            cs = doc.get("c")
            if not isinstance(cs, list):
                raise SchemaError("prime-field ring needs a list 'c'")
            return CoeffRing.prime_field(
                n, ell=_int_field(doc, "ell"), q=_int_field(doc, "q"),
                sqrt_q=_int_field(doc, "sqrt_q", optional=True),
                c_values=[int(str(x)) for x in cs])
    except RingError as exc:
        raise SchemaError(str(exc)) from None
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    raise SchemaError(f"unknown ring kind {kind!r}")


# -- ring elements --------------------------------------------------------------


def encode_elem(x: RingElem):
    if x.ring.kind == "prime-field":
        return str(x.data)
    return {weight_key(e): str(c)
            for e, c in sorted(x.data.items(), key=lambda t: glex_key(t[0]))}


def decode_elem(ring: CoeffRing, doc) -> RingElem:
    if ring.kind == "prime-field":
        if not isinstance(doc, (str, int)):
            raise SchemaError("prime-field element must be a decimal string")
        try:
            return ring.from_int(int(doc))
        except ValueError:
            raise SchemaError(f"bad element {doc!r}") from None
    if not isinstance(doc, dict):
        raise SchemaError("symbolic element must be an exponent map")
    data = {}
    for key, val in doc.items():
        exps = parse_weight_key(key, ring.ngens)
        try:
            data[exps] = int(str(val))
        except ValueError:
            raise SchemaError(f"bad coefficient {val!r}") from None
    from .errors import RingError
    try:
        return RingElem(ring, data, _validate=True)
    except RingError as exc:
        raise SchemaError(str(exc)) from None


# -- Laurent polynomials ----------------------------------------------------------


def encode_laurent(f: LaurentPoly) -> dict:
    return {weight_key(e): encode_elem(c) for e, c in f.sorted_terms()}


def decode_laurent(ring: CoeffRing, nvars: int, doc) -> LaurentPoly:
    if not isinstance(doc, dict):
        raise SchemaError("Laurent polynomial must be an exponent map")
    terms = {}
    for key, val in doc.items():
        exps = parse_weight_key(key, nvars)
        terms[exps] = decode_elem(ring, val)
    return LaurentPoly(ring, nvars, terms)


# -- characters and tables ---------------------------------------------------------


def encode_char(char: HeckeChar) -> dict:
    return {"values": [encode_elem(v) for v in char.values],
            "inv_last": encode_elem(char.inv_last)}


def decode_char(ring: CoeffRing, doc) -> HeckeChar:
    if doc is None:
        return HeckeChar.generic(ring)
    if not isinstance(doc, dict) or "values" not in doc:
        raise SchemaError("character must be an object with 'values'")
    values = tuple(decode_elem(ring, v) for v in doc["values"])
    if "inv_last" in doc:
        inv = decode_elem(ring, doc["inv_last"])
    else:
        try:
            inv = values[-1].inverse()
        except Exception:
            raise SchemaError("last character value is not an obvious unit; "
                              "supply 'inv_last'") from None
    from .errors import RingError
    try:
        return HeckeChar(ring, values, inv)
    except RingError as exc:
        raise SchemaError(str(exc)) from None


def encode_table(table: WhittakerTable) -> dict:
    return {
        "bound": table.bound,
        "values": {weight_key(mu): encode_elem(table.entries[mu])
                   for mu in table.weights()},
    }


# -- Hecke elements ------------------------------------------------------------------


def encode_im(a: HeckeElemIM) -> dict:
    return {"basis": "im",
            "terms": [[list(w.window), encode_elem(c)]
                      for w, c in a.sorted_terms()]}


def decode_im(ring: CoeffRing, n: int, doc) -> HeckeElemIM:
    terms = _term_list(doc)
    out = {}
    from .errors import RingError
    for entry in terms:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise SchemaError("each term must be [window, coefficient]")
        window, coeff = entry
        if not (isinstance(window, list)
                and all(isinstance(x, int) and not isinstance(x, bool)
                        for x in window) and len(window) == n):
            raise SchemaError(f"bad window {window!r}")
        try:
            w = ExtAffPerm(tuple(window))
        except RingError as exc:
            raise SchemaError(str(exc)) from None
        c = decode_elem(ring, coeff)
        out[w] = out.get(w, ring.zero) + c
    return HeckeElemIM(ring, n, out)


def encode_bern(a: HeckeElemB) -> dict:
    return {"basis": "bernstein",
            "terms": [[list(s), encode_laurent(f)]
                      for s, f in a.sorted_terms()]}


def decode_bern(ring: CoeffRing, n: int, doc) -> HeckeElemB:
    terms = _term_list(doc)
    out = {}
    for entry in terms:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise SchemaError("each term must be [permutation, polynomial]")
        perm, poly = entry
        if (not isinstance(perm, list) or sorted(perm) != list(range(1, n + 1))):
            raise SchemaError(f"bad finite permutation {perm!r}")
        f = decode_laurent(ring, n, poly)
        key = tuple(perm)
        out[key] = out.get(key, LaurentPoly.zero(ring, n)) + f
    return HeckeElemB(ring, n, out)


def _term_list(doc):
    if not isinstance(doc, dict) or "terms" not in doc:
        raise SchemaError("element must be an object with 'terms'")
    terms = doc["terms"]
    if not isinstance(terms, list):
        raise SchemaError("'terms' must be a list")
    return terms


# -- modules --------------------------------------------------------------------------


def _encode_matrix(m) -> list:
    return [[encode_elem(x) for x in row] for row in m]


def encode_module(mod: UnramifiedModule) -> dict:
    return {
        "dim": mod.dim,
        "regime": mod.regime,
        "basis": [weight_key(b) for b in mod.basis],
        "x": [_encode_matrix(m) for m in mod.xmat],
        "x_inv": [_encode_matrix(m) for m in mod.xmat_inv],
        "s": [_encode_matrix(m) for m in mod.smat],
    }
