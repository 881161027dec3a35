"""Verdicts for the Cohen-Macaulay, Gorenstein and Gorenstein* properties.

Each property is decided twice: from the cohomology of links (topological
route) and from the quotient algebra ``A = F(K)/(theta)`` (algebraic route).
The two must agree; a disagreement on CM or Gorenstein* raises
:class:`RouteDisagreement`.  For plain Gorenstein the topological route
(sphericity of the core) is an empirical companion, so a mismatch there is
recorded in the verdict instead of raised.

Only the characteristic of the field matters for any verdict, so GF(p) and Q
cover all fields.
"""

from __future__ import annotations

import random
from itertools import combinations
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .complex import (
    SimplicialComplex, core_decomposition, from_facets, full_subcomplex, link, star,
)
from .homology import reduced_cohomology_dims
from .linalg import FieldSpec
from .regularity import (
    QuotientAlgebra, ambient_quotient_dims, freeness_check, image_dims_of_vertex,
    pd_check, quotient_algebra, socle_dims,
)

__all__ = [
    "Check", "RouteResult", "Verdict", "RouteDisagreement", "reisner_check",
    "spherical_check", "algebraic_summary", "classify", "cross_validate",
    "CrossValidationReport", "random_complex", "SocleMismatch",
]

CM = "CM"
GORENSTEIN = "Gorenstein"
GORENSTEIN_STAR = "GorensteinStar"
PROPERTIES = (CM, GORENSTEIN, GORENSTEIN_STAR)


class Check(NamedTuple):
    """Result of a combinatorial test; ``witness = (face, degree)`` of the first failure."""

    ok: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class RouteResult:
    flag: bool
    witness: object = None


@dataclass(frozen=True)
class Verdict:
    property: str
    field: FieldSpec
    topological: RouteResult
    algebraic: RouteResult

    @property
    def agree(self) -> bool:
        return self.topological.flag == self.algebraic.flag

    @property
    def value(self) -> bool:
        """The authoritative (algebraic) answer."""
        return self.algebraic.flag


class RouteDisagreement(AssertionError):
    def __init__(self, message, complex=None, field=None, verdict=None):
        super().__init__(message)
        self.complex = complex
        self.field = field
        self.verdict = verdict


class SocleMismatch(AssertionError):
    pass


def reisner_check(K: SimplicialComplex, field: FieldSpec) -> Check:
    """Every link (``()`` included) has ``H~^i = 0`` below its dimension."""
    for sigma in K.faces:
        L = link(K, sigma)
        for i, b in reduced_cohomology_dims(L.compact(), field).items():
            if i < L.dim and b:
                return Check(False, (sigma, i))
    return Check(True)


def spherical_check(K: SimplicialComplex, field: FieldSpec) -> Check:
    """Every link has the reduced cohomology of a sphere of its dimension."""
    for sigma in K.faces:
        L = link(K, sigma)
        for i, b in reduced_cohomology_dims(L.compact(), field).items():
            if b != (1 if i == L.dim else 0):
                return Check(False, (sigma, i))
    return Check(True)


@dataclass(frozen=True)
class AlgebraicSummary:
    algebra: QuotientAlgebra
    is_free: bool
    witness_degree: int | None
    socle: tuple
    is_pd: bool
    top_degree: int

    @property
    def socle_total(self) -> int:
        return sum(self.socle)


def algebraic_summary(K: SimplicialComplex, field: FieldSpec) -> AlgebraicSummary:
    A = quotient_algebra(K, field)
    free, wit = freeness_check(K, field, A)
    soc = socle_dims(K, field, A)
    pd, D = pd_check(K, field, A)
    if pd != (sum(soc) == 1):
        raise SocleMismatch(f"Poincare duality ({pd}) disagrees with socle {soc}")
    return AlgebraicSummary(A, free, wit, soc, pd, D)


def classify(K: SimplicialComplex, field: FieldSpec, strict: bool = True,
             summary: AlgebraicSummary | None = None) -> list[Verdict]:
    """CM, Gorenstein and Gorenstein* verdicts, both routes each."""
    alg = summary or algebraic_summary(K, field)
    reis = reisner_check(K, field)
    sph = spherical_check(K, field)
    core = core_decomposition(K)
    core_sph = spherical_check(core.core, field)

    gor_alg = alg.is_free and alg.socle_total == 1
    verdicts = [
        Verdict(CM, field, RouteResult(reis.ok, reis.witness),
                RouteResult(alg.is_free, alg.witness_degree)),
        Verdict(GORENSTEIN, field, RouteResult(core_sph.ok, core_sph.witness),
                RouteResult(gor_alg, None if gor_alg else
                            ("not free" if not alg.is_free else ("socle", alg.socle_total)))),
        Verdict(GORENSTEIN_STAR, field, RouteResult(sph.ok, sph.witness),
                RouteResult(gor_alg and core.is_reduced,
                            None if gor_alg and core.is_reduced else
                            ("apex", core.apex) if gor_alg else "not Gorenstein")),
    ]
    if strict:
        for v in verdicts:
            if v.property != GORENSTEIN and not v.agree:
                raise RouteDisagreement(
                    f"{v.property} routes disagree over {field}: "
                    f"topological={v.topological}, algebraic={v.algebraic}",
                    K, field, v)
    return verdicts


def _verdict_map(verdicts):
    return {v.property: v for v in verdicts}


# -- cross-validation --------------------------------------------------------

@dataclass
class CrossValidationReport:
    seed: int | None = None
    runs: int = 0
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _bump(self, key):
        self.counts[key] = self.counts.get(key, 0) + 1

    def fail(self, check: str, K: SimplicialComplex, F: FieldSpec, detail=None):
        self.failures.append({
            "check": check, "field": F.name,
            "complex": {"m": K.m, "facets": [list(f) for f in K.facets]},
            "detail": repr(detail) if detail is not None else None,
        })

    def to_dict(self) -> dict:
        return {"seed": self.seed, "runs": self.runs, "counts": dict(sorted(self.counts.items())),
                "failures": self.failures, "findings": self.findings, "ok": self.ok}


def _cm_alg(K, F, cache):
    key = (K.compact(), F)
    if key not in cache:
        cache[key] = algebraic_summary(key[0], F)
    return cache[key]


def cross_validate(corpus: Iterable[SimplicialComplex], fields: Iterable[FieldSpec],
                   seed: int | None = None) -> CrossValidationReport:
    """Run every route and every structural identity on each (complex, field).

    Checked per pair: CM and Gorenstein* route agreement; CM implies pure;
    CM(K) iff all proper links are CM and H~^r(K) = 0 for r < n-1; the same
    recursion for Gorenstein* with top cohomology one-dimensional; for
    Gorenstein K, reduced iff dim H~^{n-1}(K) = 1 (and 0 otherwise);
    for spherical K, every K_i is CM with H~^{n-1}(K_i) = 0, and
    multiplication by v_i maps A(st(i)) isomorphically onto v_i A(K).
    """
    report = CrossValidationReport(seed=seed)
    fields = list(fields)
    cache: dict = {}
    for K in corpus:
        for F in fields:
            report.runs += 1
            try:
                alg = _cm_alg(K, F, cache)
            except SocleMismatch as exc:
                report.fail("socle and Poincare duality", K, F, str(exc))
                continue
            try:
                vs = _verdict_map(classify(K, F, strict=True, summary=alg))
            except RouteDisagreement as exc:
                report.fail("route agreement", K, F, exc.verdict)
                continue
            cm = vs[CM].value
            gstar = vs[GORENSTEIN_STAR].value
            gor = vs[GORENSTEIN].value
            report._bump(f"CM={cm}")
            report._bump(f"GorensteinStar={gstar}")
            if not vs[GORENSTEIN].agree:
                report.findings.append({"check": "Gorenstein core sphericity", "field": F.name,
                                        "complex": {"m": K.m, "facets": [list(f) for f in K.facets]}})
            if cm and not K.is_pure():
                report.fail("CM implies pure", K, F)

            red = reduced_cohomology_dims(K, F)
            n = K.n
            proper = [s for s in K.faces if s]
            links_cm = all(_cm_alg(link(K, s), F, cache).is_free for s in proper)
            low_vanish = all(red[r] == 0 for r in range(0, n - 1))
            if cm != (links_cm and low_vanish):
                report.fail("CM link recursion", K, F, (cm, links_cm, low_vanish))

            def gstar_of(L):
                s = _cm_alg(L, F, cache)
                return s.is_free and s.socle_total == 1 and core_decomposition(L.compact()).is_reduced
            links_gs = all(gstar_of(link(K, s)) for s in proper)
            sphere_top = all(red[i] == (1 if i == K.dim else 0) for i in red)
            if gstar != (links_gs and sphere_top):
                report.fail("Gorenstein* link recursion", K, F, (gstar, links_gs, sphere_top))

            if gor:
                reduced = core_decomposition(K).is_reduced
                top = red.get(n - 1, 0)
                if not ((reduced and top == 1) or (not reduced and top == 0)):
                    report.fail("Gorenstein reduced iff top cohomology", K, F, (reduced, top))

            if vs[GORENSTEIN_STAR].topological.flag:
                A = alg.algebra
                for i in K.vertices:
                    Ki = full_subcomplex(K, (i,))
                    if not (_cm_alg(Ki, F, cache).is_free
                            and reduced_cohomology_dims(Ki, F).get(n - 1, 0) == 0):
                        report.fail("spherical K_i is CM with vanishing top cohomology", K, F, i)
                    # A belongs to the compacted complex
                    img = image_dims_of_vertex(A, K.vertices.index(i) + 1)
                    amb = ambient_quotient_dims(K, star(K, (i,)), F)
                    for d in range(max(len(img), len(amb) + 1)):
                        lhs = img[d] if d < len(img) else 0
                        rhs = amb[d - 1] if 1 <= d <= len(amb) else 0
                        if lhs != rhs:
                            report.fail("multiplication by v_i onto v_i A", K, F, (i, d, img, amb))
                            break
    return report


def random_complex(m: int, density: float, seed: int) -> SimplicialComplex:
    """Seeded random complex on ``1..m``: subsets of size s kept with probability ``density**(s-1)``.

    Vertices are kept with probability 0.9, so ghost labels occur.
    """
    if m < 0 or not 0.0 <= density <= 1.0:
        raise ValueError("need m >= 0 and 0 <= density <= 1")
    rng = random.Random(seed)
    used = [v for v in range(1, m + 1) if rng.random() < 0.9]
    facets = [(v,) for v in used]
    for s in range(2, len(used) + 1):
        p = density ** (s - 1)
        facets.extend(c for c in combinations(used, s) if rng.random() < p)
    return from_facets(m, facets)
