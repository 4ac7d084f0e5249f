"""Batch command-line frontend with deterministic JSON input/output.

One job per invocation.  A job is a JSON document read from a file
argument (or stdin); results are written as JSON to stdout or --out.
Identical jobs produce byte-identical output: maps are emitted in
graded-lex key order and nothing time- or host-dependent enters the
payload.

Exit codes: 0 ok, 2 malformed input, 3 oracle disagreement, 4 ring
capability missing (half powers of q), 5 dimension mismatch.

The SWK_MAX_DIM environment variable caps the dimension of module
builds (default 120).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from . import serialize as ser
from .errors import (CapabilityError, DimensionError, OracleMismatch,
                     RingError, SchemaError, SwkError)
from .hecke import (bern_to_im, im_to_bern, is_central, satake_spherical,
                    trivial_char, x_monomial)
from .module import build_module, ihara_criterion
from .selfcheck import run_all, run_named
from .whittaker import WhittakerTable, recursion_solve, whittaker_value

DEFAULT_MAX_DIM = 120

_CHECK_MAP = {
    "whittaker": ["whittaker-dual-agreement", "whittaker-eigen-identity"],
    "hecke": ["hecke-presentations", "center-detection"],
    "module": ["module-structure", "banality-classifier"],
    "ihara": ["module-structure", "cyclic-span-criterion"],
    "banal": ["banality-classifier"],
}


def _load_job(path: str | None) -> dict:
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read job: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"job is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("job must be a JSON object")
    return doc


def _resolve_ring(job: dict, ring_file: str | None):
    doc = job.get("ring")
    if ring_file is not None:
        with open(ring_file, "r", encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"ring file: {exc}") from None
    if doc is None:
        raise SchemaError("no ring descriptor (job field 'ring' or --ring)")
    return ser.decode_ring(doc)


def _expect_command(job: dict, name: str):
    cmd = job.get("command")
    if cmd is not None and cmd != name:
        raise SchemaError(f"job says command={cmd!r}, invoked as {name!r}")


def _emit(doc: dict, out_path: str | None):
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _bound_of(job) -> int:
    bound = job.get("bound")
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise SchemaError("'bound' must be a nonnegative integer")
    return bound


def cmd_whittaker(job: dict, args) -> dict:
    ring = _resolve_ring(job, args.ring)
    char = ser.decode_char(ring, job.get("char"))
    bound = _bound_of(job)
    from .symfun import dominant_weights_in_box
    weights = dominant_weights_in_box(char.n, bound)
    if args.threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            values = list(pool.map(lambda m: whittaker_value(char, m),
                                   weights))
    else:
        values = [whittaker_value(char, mu) for mu in weights]
    table = WhittakerTable(char, bound, dict(zip(weights, values)))
    doc = {
        "command": "whittaker",
        "ring": ser.encode_ring(ring),
        "char": ser.encode_char(char),
    }
    doc.update(ser.encode_table(table))
    if args.oracle:
        solved = recursion_solve(char, bound)
        agree = solved.entries == table.entries
        doc["oracle"] = {"method": "recursion", "agree": agree}
        if not agree:
            bad = [ser.weight_key(mu) for mu in weights
                   if solved.value(mu) != table.value(mu)]
            raise OracleMismatch(
                f"closed formula and recursion disagree at {bad[:5]}")
    return doc


def _decode_any_elem(ring, n, doc):
    if not isinstance(doc, dict):
        raise SchemaError("element must be an object")
    basis = doc.get("basis")
    if basis == "im":
        return ser.decode_im(ring, n, doc)
    if basis == "bernstein":
        return ser.decode_bern(ring, n, doc)
    raise SchemaError(f"element basis must be 'im' or 'bernstein', "
                      f"got {basis!r}")


def _encode_any_elem(elem):
    from .hecke import HeckeElemIM
    if isinstance(elem, HeckeElemIM):
        return ser.encode_im(elem)
    return ser.encode_bern(elem)


def cmd_hecke(job: dict, args) -> dict:
    ring = _resolve_ring(job, args.ring)
    n = job.get("n", ring.n)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SchemaError("'n' must be a positive integer")
    op = job.get("operation")
    doc = {"command": "hecke", "ring": ser.encode_ring(ring), "n": n,
           "operation": op}

    def elements(expect: int | None = None):
        els = job.get("elements")
        if not isinstance(els, list) or not els:
            raise SchemaError("'elements' must be a nonempty list")
        if expect is not None and len(els) != expect:
            raise SchemaError(f"operation {op!r} takes exactly {expect} "
                              "element(s)")
        return [_decode_any_elem(ring, n, e) for e in els]

    if op == "product":
        els = elements()
        first = els[0]
        if not all(type(e) is type(first) for e in els):
            raise SchemaError("product factors must share a basis")
        acc = first
        for e in els[1:]:
            acc = acc * e
        doc["result"] = _encode_any_elem(acc)
        doc["zero"] = acc.is_zero()
    elif op == "to-bernstein":
        (a,) = elements(1)
        from .hecke import HeckeElemIM
        if not isinstance(a, HeckeElemIM):
            raise SchemaError("to-bernstein expects a coset-basis element")
        doc["result"] = ser.encode_bern(im_to_bern(a))
    elif op == "to-im":
        (a,) = elements(1)
        from .hecke import HeckeElemB
        if not isinstance(a, HeckeElemB):
            raise SchemaError("to-im expects a translation-basis element")
        doc["result"] = ser.encode_im(bern_to_im(a))
    elif op == "is-central":
        (a,) = elements(1)
        from .hecke import HeckeElemB
        if not isinstance(a, HeckeElemB):
            raise SchemaError("is-central expects a translation-basis "
                              "element")
        doc["result"] = is_central(a)
    elif op == "trivial-char":
        (a,) = elements(1)
        from .hecke import HeckeElemB
        if not isinstance(a, HeckeElemB):
            raise SchemaError("trivial-char expects a translation-basis "
                              "element")
        doc["result"] = ser.encode_elem(trivial_char(a))
    elif op == "x-monomial":
        mu = job.get("weight")
        if (not isinstance(mu, list) or len(mu) != n
                or not all(isinstance(x, int) and not isinstance(x, bool)
                           for x in mu)):
            raise SchemaError("'weight' must be a length-n list of ints")
        doc["result"] = ser.encode_im(x_monomial(ring, tuple(mu)))
    elif op == "satake":
        j = job.get("j")
        if isinstance(j, bool) or not isinstance(j, int) or not 1 <= j <= n:
            raise SchemaError("'j' must be an integer in 1..n")
        doc["result"] = ser.encode_laurent(satake_spherical(ring, j, n))
    else:
        raise SchemaError(f"unknown hecke operation {op!r}")
    return doc


def _max_dim() -> int:
    raw = os.environ.get("SWK_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"SWK_MAX_DIM={raw!r} is not an integer") from None


def _build_from_job(job: dict, args):
    ring = _resolve_ring(job, args.ring)
    char = ser.decode_char(ring, job.get("char"))
    if factorial(char.n) > _max_dim():
        raise DimensionError(
            f"module dimension {char.n}! exceeds SWK_MAX_DIM={_max_dim()}")
    q_cls = job.get("q")
    q_cls = int(str(q_cls)) if q_cls is not None else None
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_module(char, q_for_classification=q_cls)


def cmd_module(job: dict, args) -> dict:
    mod = _build_from_job(job, args)
    doc = {"command": "module", "ring": ser.encode_ring(mod.ring)}
    doc.update(ser.encode_module(mod))
    if mod.regime in ("neither", "unclassified"):
        doc["note"] = "formal model, outside quasi-banal hypotheses"
    return doc


def cmd_ihara(job: dict, args) -> dict:
    mod = _build_from_job(job, args)
    vec_doc = job.get("vector")
    if not isinstance(vec_doc, list):
        raise SchemaError("'vector' must be a list of ring elements")
    if len(vec_doc) != mod.dim:
        raise DimensionError(
            f"vector has length {len(vec_doc)}, module dimension {mod.dim}")
    f = [ser.decode_elem(mod.ring, x) for x in vec_doc]
    verdict = ihara_criterion(mod, f)
    return {
        "command": "ihara",
        "ring": ser.encode_ring(mod.ring),
        "regime": mod.regime,
        "span_dim": verdict.span_dim,
        "n_factorial": verdict.n_factorial,
        "verdict": verdict.verdict,
    }


def cmd_banal(job: dict, args) -> dict:
    from .module import banal_class
    n = job.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SchemaError("'n' must be a positive integer")
    try:
        q = int(str(job["q"]))
        ell = int(str(job["ell"]))
    except (KeyError, ValueError):
        raise SchemaError("'q' and 'ell' must be integers or decimal "
                          "strings") from None
    try:
        cls = banal_class(n, q, ell)
    except RingError as exc:
        raise SchemaError(str(exc)) from None
    return {
        "command": "banal",
        "n": n, "q": str(q), "ell": str(ell),
        "gl_order": str(cls.gl_order),
        "verdict": cls.verdict,
    }


_COMMANDS = {
    "whittaker": cmd_whittaker,
    "hecke": cmd_hecke,
    "module": cmd_module,
    "ihara": cmd_ihara,
    "banal": cmd_banal,
}


def exit_code_for(exc: SwkError) -> int:
    if isinstance(exc, OracleMismatch):
        return 3
    if isinstance(exc, CapabilityError):
        return 4
    if isinstance(exc, DimensionError):
        return 5
    if isinstance(exc, (SchemaError, RingError)):
        return 2
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swk",
        description="exact spherical Whittaker / affine Hecke / "
                    "unramified module computations over JSON jobs",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in (*_COMMANDS, "selfcheck"):
        p = sub.add_parser(name)
        if name != "selfcheck":
            p.add_argument("job", nargs="?", default=None,
                           help="job JSON file ('-' or omitted: stdin)")
            p.add_argument("--ring", default=None, metavar="FILE",
                           help="ring descriptor file overriding the job")
            p.add_argument("--check", action="store_true",
                           help="also run this command's invariant suite")
        p.add_argument("--out", default=None, metavar="FILE",
                       help="write output here instead of stdout")
        p.add_argument("--threads", type=int, default=1, metavar="N",
                       help="opt-in internal parallelism")
        if name == "whittaker":
            p.add_argument("--oracle", action="store_true",
                           help="cross-check against the recursion solver")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    if args.subcommand == "selfcheck":
        out = sys.stdout
        if args.out:
            out = open(args.out, "w", encoding="utf-8")
        try:
            ok = run_all(out=out)
        finally:
            if args.out:
                out.close()
        return 0 if ok else 1
    try:
        job = _load_job(args.job)
        _expect_command(job, args.subcommand)
        doc = _COMMANDS[args.subcommand](job, args)
        _emit(doc, args.out)
        if args.check:
            names = _CHECK_MAP[args.subcommand]
            if not run_named(names, out=sys.stderr):
                return 1
    except SwkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
