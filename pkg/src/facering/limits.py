"""Higher derived limits over the face poset of a complex.

A :class:`PosetFunctor` assigns a finite-dimensional vector space to each
face and a matrix to each covering pair ``s < t`` (``|t| = |s| + 1``).
``direction`` says which way the matrices go:

* ``"descending"``: ``phi(t) -> phi(s)``.  This is a functor on ``cat(K)^op``;
  chains ``c_0 -> ... -> c_r`` of the indexing category are increasing face
  sequences and ``c_0`` is the smallest face.
* ``"ascending"``: ``phi(s) -> phi(t)``, a functor on ``cat(K)``, indexing
  category ``cat(K)^op``; chains are decreasing face sequences and ``c_0``
  is the largest face.

Normalised cochains live on chains of distinct faces with values in
``phi(c_0)``, and

    (delta u)(c_0..c_{r+1}) = phi(c_1 -> c_0) u(c_1..c_{r+1})
                              + sum_{k>=1} (-1)**k u(c_0..^c_k..c_{r+1}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .complex import SimplicialComplex, star
from .face_ring import monomial_basis
from .homology import cohomology_dims
from .linalg import ExactMatrix, FieldSpec, rank_of_rows

__all__ = [
    "PosetFunctor", "NormalizedCochainComplex", "build_normalized_complex",
    "higher_limit_dims", "canonical_functors", "constant_functor",
    "atomic_functor", "star_functor", "FunctorialityError", "IdentityCheck",
    "star_identity", "atomic_chain", "vanishing_bound", "star_summands",
    "indicator_functor", "star_limit_dims",
]

ASCENDING = "ascending"
DESCENDING = "descending"


class FunctorialityError(ValueError):
    pass


@dataclass
class PosetFunctor:
    complex: SimplicialComplex
    field: FieldSpec
    dims: dict
    maps: dict
    direction: str = DESCENDING
    includes_empty_face: bool = True
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.direction not in (ASCENDING, DESCENDING):
            raise ValueError(f"unknown direction {self.direction!r}")

    @property
    def faces(self) -> list:
        return [f for f in self.complex.faces if f or self.includes_empty_face]

    def _cover(self, s, t) -> ExactMatrix:
        M = self.maps.get((s, t))
        if M is None:
            rows, cols = (self.dims[t], self.dims[s]) if self.direction == ASCENDING else (self.dims[s], self.dims[t])
            return ExactMatrix.zeros(rows, cols, self.field)
        return M

    def map_between(self, s: tuple, t: tuple) -> ExactMatrix:
        """Value of the functor on ``s <= t``, composed along covers in label order."""
        key = (s, t)
        if key in self._cache:
            return self._cache[key]
        if s == t:
            M = ExactMatrix.identity(self.dims[s], self.field)
        else:
            extra = [v for v in t if v not in s]
            mid = tuple(sorted(s + (extra[0],)))
            first = self._cover(s, mid)
            rest = self.map_between(mid, t)
            M = rest @ first if self.direction == ASCENDING else first @ rest
        self._cache[key] = M
        return M

    def check_functoriality(self) -> None:
        """Both paths around every length-two interval agree."""
        fs = set(self.faces)
        for s in self.faces:
            for t in self.faces:
                if len(t) != len(s) + 2 or not set(s) < set(t):
                    continue
                a, b = [v for v in t if v not in s]
                p1 = tuple(sorted(s + (a,)))
                p2 = tuple(sorted(s + (b,)))
                if p1 not in fs or p2 not in fs:
                    continue
                if self.direction == ASCENDING:
                    x = self._cover(p1, t) @ self._cover(s, p1)
                    y = self._cover(p2, t) @ self._cover(s, p2)
                else:
                    x = self._cover(s, p1) @ self._cover(p1, t)
                    y = self._cover(s, p2) @ self._cover(p2, t)
                if x != y:
                    raise FunctorialityError(f"square {s} < {t} does not commute")


@dataclass
class NormalizedCochainComplex:
    """``chains[r]``: chains of the indexing category; ``offsets[r][chain]``: first basis index."""

    functor: PosetFunctor
    chains: dict
    offsets: dict
    sizes: dict
    delta: dict

    @property
    def field(self) -> FieldSpec:
        return self.functor.field

    def check_square_zero(self) -> bool:
        for r in self.delta:
            if r + 1 in self.delta and not (self.delta[r + 1] @ self.delta[r]).is_zero():
                return False
        return True


def _chains(faces: list, descending_order: bool) -> dict:
    """Strict chains grouped by length-1, in category order."""
    return _chains_cached(tuple(faces), descending_order)


@lru_cache(maxsize=64)
def _chains_cached(faces: tuple, descending_order: bool) -> dict:
    ordered = sorted(faces, key=lambda f: (len(f), f))
    up = {f: [g for g in ordered if len(g) > len(f) and set(f) < set(g)] for f in ordered}
    out: dict = {}

    def grow(chain):
        r = len(chain) - 1
        out.setdefault(r, []).append(tuple(reversed(chain)) if descending_order else tuple(chain))
        for g in up[chain[-1]]:
            grow(chain + [g])

    for f in ordered:
        grow([f])
    for r in out:
        out[r].sort(key=lambda c: [(len(f), f) for f in c])
    return out


def build_normalized_complex(K: SimplicialComplex, phi: PosetFunctor) -> NormalizedCochainComplex:
    if phi.complex != K:
        raise ValueError("functor is defined on a different complex")
    phi.check_functoriality()
    chains = _chains(phi.faces, phi.direction == ASCENDING)
    offsets, sizes = {}, {}
    for r, cs in chains.items():
        off, pos = {}, 0
        for c in cs:
            off[c] = pos
            pos += phi.dims[c[0]]
        offsets[r], sizes[r] = off, pos
    delta = {}
    F = phi.field
    for r in sorted(chains):
        if r + 1 not in chains:
            continue
        rows = []
        src_off = offsets[r]
        for c in chains[r + 1]:
            dim0 = phi.dims[c[0]]
            block = [dict() for _ in range(dim0)]
            # k = 0: apply phi(c_1 -> c_0)
            if phi.direction == ASCENDING:
                M = phi.map_between(c[1], c[0])
            else:
                M = phi.map_between(c[0], c[1])
            base = src_off[c[1:]]
            for i in range(dim0):
                for j, v in M.row(i).items():
                    block[i][base + j] = block[i].get(base + j, 0) + v
            for k in range(1, len(c)):
                face = c[:k] + c[k + 1:]
                base = src_off[face]
                sign = -1 if k % 2 else 1
                for i in range(dim0):
                    block[i][base + i] = block[i].get(base + i, 0) + sign
            rows.extend(block)
        delta[r] = ExactMatrix.from_sparse(rows, sizes[r], F)
    return NormalizedCochainComplex(phi, chains, offsets, sizes, delta)


def higher_limit_dims(cx: NormalizedCochainComplex) -> dict[int, int]:
    """``{i: dim lim^i}`` for every cochain degree present."""
    F = cx.field
    ranks = {r: rank_of_rows(M.sparse_rows(), F) for r, M in cx.delta.items()}
    return {r: cx.sizes[r] - ranks.get(r, 0) - ranks.get(r - 1, 0) for r in sorted(cx.sizes)}


# -- canonical functors -----------------------------------------------------

def constant_functor(K: SimplicialComplex, field: FieldSpec, dim: int = 1,
                     include_empty: bool = False) -> PosetFunctor:
    """Constant value ``F^dim`` with identity maps; on the non-empty faces by default."""
    faces = [f for f in K.faces if f or include_empty]
    dims = {f: dim for f in faces}
    maps = {}
    fs = set(faces)
    for t in faces:
        for k in range(len(t)):
            s = t[:k] + t[k + 1:]
            if s in fs:
                maps[(s, t)] = ExactMatrix.identity(dim, field)
    return PosetFunctor(K, field, dims, maps, DESCENDING, include_empty)


def atomic_functor(K: SimplicialComplex, field: FieldSpec, dim: int = 1) -> PosetFunctor:
    """``F^dim`` at the empty face, zero elsewhere, on all of ``cat(K)``."""
    dims = {f: (dim if not f else 0) for f in K.faces}
    return PosetFunctor(K, field, dims, {}, DESCENDING, True)


@lru_cache(maxsize=1024)
def _star_basis(K, face, d):
    return monomial_basis(star(K, face), d)


def star_functor(K: SimplicialComplex, field: FieldSpec, d: int) -> PosetFunctor:
    """``s -> F(st(s))_d`` on non-empty faces, restriction maps for ``s < t``.

    ``st(t)`` is contained in ``st(s)``, so a monomial of ``F(st(s))`` maps to
    itself if its support is a face of ``st(t)`` and to zero otherwise.
    """
    if d < 0:
        raise ValueError("internal degree must be >= 0")
    faces = [f for f in K.faces if f]
    dims = {f: len(_star_basis(K, f, d)) for f in faces}
    maps = {}
    fs = set(faces)
    for t in faces:
        tgt = {mono: i for i, mono in enumerate(_star_basis(K, t, d))}
        for k in range(len(t)):
            s = t[:k] + t[k + 1:]
            if s not in fs:
                continue
            src = _star_basis(K, s, d)
            rows = [dict() for _ in tgt]
            for j, mono in enumerate(src):
                i = tgt.get(mono)
                if i is not None:
                    rows[i][j] = 1
            maps[(s, t)] = ExactMatrix.from_sparse(rows, len(src), field)
    return PosetFunctor(K, field, dims, maps, ASCENDING, False)


def canonical_functors(K: SimplicialComplex, field: FieldSpec, which: str, arg: int = 1) -> PosetFunctor:
    """``which`` in ``constant`` (arg = value dim), ``atomic`` (arg = dim), ``star`` (arg = degree)."""
    if which == "constant":
        return constant_functor(K, field, arg)
    if which == "atomic":
        return atomic_functor(K, field, arg)
    if which == "star":
        return star_functor(K, field, arg)
    raise ValueError(f"unknown functor {which!r}")


# -- identities --------------------------------------------------------------

class IdentityCheck(NamedTuple):
    ok: bool
    observed: dict
    expected: dict


def _same(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


def star_summands(K: SimplicialComplex, d: int) -> dict:
    """Split the degree-``d`` star functor into one-dimensional summands.

    Every structure map sends a monomial to itself or to zero, so the functor
    is the direct sum over monomials ``x`` of degree ``d`` of the functor
    that is ``F`` on ``{s : s u supp(x) in K}`` and zero elsewhere.  Returns
    ``{support faces: multiplicity}``.
    """
    faces = [f for f in K.faces if f]
    out: dict = {}
    for mono in monomial_basis(K, d):
        sup = frozenset(i + 1 for i, e in enumerate(mono) if e)
        key = tuple(f for f in faces if tuple(sorted(sup.union(f))) in K)
        out[key] = out.get(key, 0) + 1
    return out


def indicator_functor(K: SimplicialComplex, field: FieldSpec, support) -> PosetFunctor:
    """``F`` on a subcomplex's non-empty faces, zero elsewhere, identities between them."""
    support = set(support)
    faces = [f for f in K.faces if f]
    dims = {f: int(f in support) for f in faces}
    one = ExactMatrix.identity(1, field)
    maps = {}
    for t in support:
        for k in range(len(t)):
            s = t[:k] + t[k + 1:]
            if s in support:
                maps[(s, t)] = one
    return PosetFunctor(K, field, dims, maps, ASCENDING, False)


def star_limit_dims(K: SimplicialComplex, field: FieldSpec, d: int, split: bool = True) -> dict:
    """``dim lim^i`` of the degree-``d`` star functor.

    With ``split`` the normalised complex is computed once per distinct
    summand (see :func:`star_summands`) and weighted by multiplicity, which
    keeps the matrices one value wide.  ``split=False`` builds it whole.
    """
    if not split:
        cx = build_normalized_complex(K, star_functor(K, field, d))
        if not cx.check_square_zero():
            raise AssertionError("delta^2 != 0 on the star functor complex")
        return higher_limit_dims(cx)
    total: dict = {}
    for sup, mult in star_summands(K, d).items():
        for i, v in _indicator_limits(K, field, sup).items():
            total[i] = total.get(i, 0) + mult * v
    return total


@lru_cache(maxsize=4096)
def _indicator_limits(K, field, support) -> dict:
    cx = build_normalized_complex(K, indicator_functor(K, field, support))
    if not cx.check_square_zero():
        raise AssertionError("delta^2 != 0 on a star summand")
    return higher_limit_dims(cx)


def star_identity(K: SimplicialComplex, field: FieldSpec, d: int, split: bool = True) -> IdentityCheck:
    """``lim^*`` of the degree-``d`` star functor against cohomology and ``dim F(K)_d``.

    Degree 0 gives the unreduced cohomology of K; positive degrees give
    ``dim F(K)_d`` in ``lim^0`` and nothing above.
    """
    if d < 0:
        raise ValueError("internal degree must be >= 0")
    got = star_limit_dims(K, field, d, split)
    if d == 0:
        want = cohomology_dims(K, field)
    else:
        want = {0: len(monomial_basis(K, d))}
    return IdentityCheck(_same(got, want), got, want)


def atomic_chain(K: SimplicialComplex, field: FieldSpec) -> IdentityCheck:
    """``H^i(K) = lim^i(constant on non-empty faces) = lim^{i+1}(atomic)`` for ``i >= 1``.

    ``observed`` maps i to the (constant, atomic) pair, ``expected`` to H^i.
    The i = 0 term is left out on purpose: reduced and unreduced H^0 differ there.
    """
    c = build_normalized_complex(K, constant_functor(K, field))
    a = build_normalized_complex(K, atomic_functor(K, field))
    if not (c.check_square_zero() and a.check_square_zero()):
        raise AssertionError("delta^2 != 0 on a canonical functor complex")
    lc, la = higher_limit_dims(c), higher_limit_dims(a)
    h = cohomology_dims(K, field)
    top = max([0, *h, *lc, *(i - 1 for i in la)])
    obs, exp = {}, {}
    for i in range(1, top + 1):
        obs[i] = (lc.get(i, 0), la.get(i + 1, 0))
        exp[i] = h.get(i, 0)
    ok = all(x == y == exp[i] for i, (x, y) in obs.items())
    return IdentityCheck(ok, obs, exp)


def vanishing_bound(cx: NormalizedCochainComplex) -> bool:
    """``lim^i = 0`` above the order of the largest face (plus one with the empty face)."""
    K = cx.functor.complex
    bound = K.n + (1 if cx.functor.includes_empty_face else 0)
    return all(v == 0 for i, v in higher_limit_dims(cx).items() if i >= bound)
