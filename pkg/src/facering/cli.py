"""Command line front end: ``facering {analyze,gen,crossval,limits}``.

Exit codes: 0 success, 1 bad input or usage, 2 a route disagreement or a
failed identity (which means a bug, not bad input).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .complex import (
    SimplicialComplex, cone, core_decomposition, cycle, join, link,
    minimal_missing_faces, points, rp2_6, simplex, simplex_boundary, suspension,
)
from .corpus import DEFAULT_SEED, named_corpus, random_corpus
from .criteria import RouteDisagreement, classify, algebraic_summary, cross_validate, random_complex
from .face_ring import hilbert_series
from .homology import reduced_cohomology_dims
from .io import SCHEMA, ComplexDocument, DocumentError, dump_json, load_document
from .limits import (
    atomic_chain, build_normalized_complex, canonical_functors, higher_limit_dims, star_identity,
    vanishing_bound,
)
from .linalg import FieldSpec
from .regularity import default_d_max, koszul_tor_dims

EXIT_OK, EXIT_INPUT, EXIT_BUG = 0, 1, 2
DEFAULT_FIELDS = "f2,f3,q"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for disagreements here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fields(text: str) -> list[FieldSpec]:
    out = []
    for tok in text.split(","):
        if not tok.strip():
            continue
        try:
            F = FieldSpec.parse(tok)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if F not in out:
            out.append(F)
    if not out:
        raise UsageError("no fields given")
    return out


def _degrees(specs: list[str]) -> list[int]:
    """``3``, ``0..3`` or ``0,2`` (repeatable); all must be >= 0."""
    out: list[int] = []
    for spec in specs:
        for part in spec.split(","):
            part = part.strip()
            try:
                if ".." in part:
                    a, b = (int(x) for x in part.split(".."))
                    if b < a:
                        raise UsageError(f"empty degree range {part!r}")
                    vals = range(a, b + 1)
                else:
                    vals = [int(part)]
            except ValueError:
                raise UsageError(f"bad degree {part!r}") from None
            for d in vals:
                if d < 0:
                    raise UsageError(f"degree must be >= 0, got {d}")
                if d not in out:
                    out.append(d)
    return sorted(out)


def _plain(x):
    """Tuples to lists, recursively, for JSON."""
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, FieldSpec):
        return x.name
    return x


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -- analyze -----------------------------------------------------------------

def _profile_block(K: SimplicialComplex) -> dict:
    core = core_decomposition(K)
    return {
        "dim": K.dim, "n": K.n, "f_vector": list(K.f_vector()), "pure": K.is_pure(),
        "reduced": core.is_reduced, "apex": list(core.apex),
        "vertices": list(K.vertices), "ghosts": list(K.ghosts),
        "minimal_missing_faces": _plain(minimal_missing_faces(K)),
    }


def _verdict_block(v) -> dict:
    return {
        "property": v.property,
        "topological": {"flag": v.topological.flag, "witness": _plain(v.topological.witness)},
        "algebraic": {"flag": v.algebraic.flag, "witness": _plain(v.algebraic.witness)},
        "agree": v.agree,
    }


def analyze_complex(K: SimplicialComplex, F: FieldSpec, d_max: int, strict: bool = True) -> dict:
    """One per-field block of the analysis report."""
    summary = algebraic_summary(K, F)
    verdicts = classify(K, F, strict=strict, summary=summary)
    links = []
    for sigma in K.faces:
        L = link(K, sigma)
        links.append({"face": list(sigma), "dim": L.dim,
                      "reduced_cohomology": _plain(reduced_cohomology_dims(L.compact(), F))})
    H = hilbert_series(K)
    tor = koszul_tor_dims(K, F, d_max)
    return {
        "field": F.name,
        "reduced_cohomology": _plain(reduced_cohomology_dims(K, F)),
        "link_cohomology": links,
        "hilbert_series": {"numerator": list(H.numerator), "denominator_exponent": H.n},
        "quotient_dims": list(summary.algebra.dims),
        "socle_dims": list(summary.socle),
        "poincare_duality": summary.is_pd,
        "tor": {"d_max": tor.d_max, "rows": [list(tor.row(j)) for j in range(tor.n + 1)]},
        "verdicts": [_verdict_block(v) for v in verdicts],
    }


def build_report(doc: ComplexDocument, fields, d_max: int | None = None, strict: bool = True) -> dict:
    K = doc.to_complex()
    if d_max is None:
        d_max = default_d_max(K.n)
    blocks = [analyze_complex(K, F, d_max, strict) for F in fields]
    return {
        "schema": SCHEMA,
        "tool": {"name": "facering", "version": __version__},
        "seed": doc.metadata.get("seed"),
        "name": doc.name,
        "complex": {"m": doc.m, "facets": [list(f) for f in K.facets]},
        "profile": _profile_block(K),
        "d_max": d_max,
        "fields": blocks,
        "all_agree": all(v["agree"] for b in blocks for v in b["verdicts"]
                         if v["property"] != "Gorenstein"),
    }


def render_text(report: dict) -> str:
    p = report["profile"]
    lines = [f"{report['name']}: dim {p['dim']}, f-vector {p['f_vector']}, "
             f"pure={p['pure']}, reduced={p['reduced']}"]
    for b in report["fields"]:
        vs = ", ".join(
            f"{v['property']}={v['algebraic']['flag']}" + ("" if v["agree"] else " (routes differ)")
            for v in b["verdicts"])
        lines.append(f"  {b['field']}: A dims {b['quotient_dims']}, socle {b['socle_dims']}; {vs}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    fields = _fields(args.fields)
    if args.d_max is not None and args.d_max < 0:
        raise UsageError("--d-max must be >= 0")
    doc = load_document(args.input)
    try:
        report = build_report(doc, fields, args.d_max, strict=not args.report_only)
    except RouteDisagreement as exc:
        print(f"route disagreement: {exc}", file=sys.stderr)
        print(dump_json({"field": exc.field.name, "complex": doc.to_dict(),
                         "verdict": _verdict_block(exc.verdict)}), end="", file=sys.stderr)
        return EXIT_BUG
    _write(render_text(report) if args.text else dump_json(report), args.report)
    if args.report and not args.text:
        sys.stdout.write(render_text(report))
    return EXIT_OK


# -- gen ---------------------------------------------------------------------

GEN_FAMILIES = {
    "simplex_boundary": "N", "simplex": "N", "points": "M", "cycle": "M",
    "cone": "DOC", "suspension": "DOC", "join": "DOC DOC", "rp2_6": "",
    "random": "M DENSITY SEED",
}


def _int(x: str, what: str) -> int:
    try:
        return int(x)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {x!r}") from None


def generate(family: str, params: list[str]) -> ComplexDocument:
    if family not in GEN_FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(GEN_FAMILIES)}")
    want = GEN_FAMILIES[family].split()
    if len(params) != len(want):
        raise UsageError(f"{family} takes {len(want)} argument(s): {GEN_FAMILIES[family] or '(none)'}")
    meta: dict = {"family": family, "params": list(params)}
    try:
        if family in ("simplex_boundary", "simplex", "points", "cycle"):
            k = _int(params[0], want[0])
            if k < 0:
                raise UsageError(f"{want[0]} must be >= 0")
            meta["params"] = [k]
            if family == "simplex_boundary":
                K = simplex_boundary(k)
            elif family == "simplex":
                K = simplex(k + 1)
            elif family == "points":
                K = points(k)
            else:
                K = cycle(k)
            name = f"{family}({k})"
        elif family == "rp2_6":
            K, name = rp2_6(), "rp2_6"
        elif family == "random":
            m = _int(params[0], "M")
            seed = _int(params[2], "SEED")
            try:
                density = float(params[1])
            except ValueError:
                raise UsageError(f"DENSITY must be a number, got {params[1]!r}") from None
            K = random_complex(m, density, seed)
            name = f"random({m},{density},{seed})"
            meta["params"] = [m, density, seed]
            meta["seed"] = seed
        else:
            docs = [load_document(p) for p in params]
            Ks = [d.to_complex() for d in docs]
            if family == "cone":
                K = cone(Ks[0])
            elif family == "suspension":
                K = suspension(Ks[0])
            else:
                K = join(Ks[0], Ks[1])
            K = SimplicialComplex._make(K.m, K.faces)
            name = f"{family}({','.join(d.name for d in docs)})"
            meta["params"] = [d.name for d in docs]
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise UsageError(str(exc)) from None
    return ComplexDocument.from_complex(K, name, meta)


def cmd_gen(args) -> int:
    doc = generate(args.family, args.params)
    _write(doc.dumps(), args.out)
    return EXIT_OK


# -- crossval ----------------------------------------------------------------

def load_corpus_dir(path) -> list[tuple[str, SimplicialComplex]]:
    d = Path(path)
    if not d.is_dir():
        raise DocumentError(f"{d}: not a directory")
    return [(p.name, load_document(p).to_complex()) for p in sorted(d.glob("*.json"))]


def cmd_crossval(args) -> int:
    fields = _fields(args.fields)
    if args.corpus is not None:
        corpus = [K for _, K in load_corpus_dir(args.corpus)]
        seed = None
    else:
        if args.count < 0:
            raise UsageError("--count must be >= 0")
        seed = args.seed
        corpus = list(named_corpus().values()) + random_corpus(args.count, seed)
    report = cross_validate(corpus, fields, seed=seed)
    out = {"schema": SCHEMA, "tool": {"name": "facering", "version": __version__},
           "fields": [F.name for F in fields], **report.to_dict()}
    _write(dump_json(out), args.report)
    summary = f"crossval: {report.runs} runs, {len(report.failures)} failures, {len(report.findings)} findings"
    print(summary, file=sys.stderr if args.report is None else sys.stdout)
    if not report.ok:
        for f in report.failures[:5]:
            print(json.dumps(f), file=sys.stderr)
        return EXIT_BUG
    return EXIT_OK


# -- limits ------------------------------------------------------------------

def limits_report(K: SimplicialComplex, F: FieldSpec, functor: str, degrees: list[int], dim: int) -> dict:
    runs = []
    args = degrees if functor == "star" else [dim]
    for a in args:
        cx = build_normalized_complex(K, canonical_functors(K, F, functor, a))
        runs.append({"arg": a, "square_zero": cx.check_square_zero(),
                     "vanishing_bound": vanishing_bound(cx),
                     "lim": _plain(higher_limit_dims(cx))})
    star_checks = []
    for d in (degrees if functor == "star" else [0]):
        r = star_identity(K, F, d)
        star_checks.append({"degree": d, "ok": r.ok, "lim": _plain(r.observed), "expected": _plain(r.expected)})
    chain = atomic_chain(K, F)
    return {
        "field": F.name, "functor": functor, "runs": runs,
        "star_identity": star_checks,
        "constant_atomic_chain": {"ok": chain.ok, "observed": _plain(chain.observed),
                                  "expected": _plain(chain.expected)},
        "ok": all(r["square_zero"] and r["vanishing_bound"] for r in runs)
              and all(c["ok"] for c in star_checks) and chain.ok,
    }


def cmd_limits(args) -> int:
    fields = _fields(args.fields)
    degrees = _degrees(args.degree or ["0..3"])
    if args.dim < 0:
        raise UsageError("--dim must be >= 0")
    doc = load_document(args.input)
    K = doc.to_complex()
    blocks = [limits_report(K, F, args.functor, degrees, args.dim) for F in fields]
    out = {"schema": SCHEMA, "tool": {"name": "facering", "version": __version__},
           "name": doc.name, "fields": blocks, "ok": all(b["ok"] for b in blocks)}
    if args.report:
        _write(dump_json(out), args.report)
    for b in blocks:
        for r in b["runs"]:
            dims = " ".join(f"lim^{i}={v}" for i, v in r["lim"].items())
            print(f"{b['field']} {b['functor']}({r['arg']}): {dims}")
        for c in b["star_identity"]:
            print(f"{b['field']} star identity, degree {c['degree']}: {'PASS' if c['ok'] else 'FAIL'}")
        print(f"{b['field']} constant/atomic chain: {'PASS' if b['constant_atomic_chain']['ok'] else 'FAIL'}")
    return EXIT_OK if out["ok"] else EXIT_BUG


# -- entry point -------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="facering", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"facering {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full report for one complex")
    a.add_argument("input")
    a.add_argument("--fields", default=DEFAULT_FIELDS)
    a.add_argument("--d-max", type=int, default=None, help="Tor degree bound (default n(n+1)/2 + n)")
    a.add_argument("--report", "-o", default=None, help="JSON output path (default stdout)")
    a.add_argument("--text", action="store_true", help="human-readable rendering instead of JSON")
    a.add_argument("--report-only", action="store_true",
                   help="record route disagreements in the report instead of failing")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("gen", help="write a complex document",
                       epilog="families: " + "; ".join(f"{k} {v}".strip() for k, v in GEN_FAMILIES.items()))
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--out", "-o", default=None)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("crossval", help="differential test of the two routes")
    c.add_argument("corpus", nargs="?", default=None, help="directory of *.json documents")
    c.add_argument("--fields", default=DEFAULT_FIELDS)
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--count", type=int, default=200, help="random complexes for the built-in corpus")
    c.add_argument("--report", "-o", default=None)
    c.set_defaults(func=cmd_crossval)

    lm = sub.add_parser("limits", help="higher limits of a canonical functor")
    lm.add_argument("input")
    lm.add_argument("--functor", choices=("constant", "atomic", "star"), default="star")
    lm.add_argument("--degree", action="append", default=None,
                    help="star functor degrees: 2, 0..3 or 0,2 (repeatable; default 0..3)")
    lm.add_argument("--dim", type=int, default=1, help="value dimension for constant/atomic")
    lm.add_argument("--fields", default=DEFAULT_FIELDS)
    lm.add_argument("--report", "-o", default=None)
    lm.set_defaults(func=cmd_limits)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:      # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"facering {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DocumentError as exc:
        print(f"facering {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
