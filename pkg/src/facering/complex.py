"""Finite abstract simplicial complexes on the vertex labels ``1..m``.

Faces are sorted tuples of positive ints; ``()`` is the empty face and is a
member of every complex.  A label ``i`` with ``(i,)`` not a face is a *ghost*:
it is part of the label set but not of the geometry.  Ghosts appear naturally
after taking links and full subcomplexes, and keep labels stable across
derived complexes.  :meth:`SimplicialComplex.compact` drops them and records
the original labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

Face = tuple

__all__ = [
    "Face", "SimplicialComplex", "FVector", "Profile", "CoreDecomposition",
    "from_facets", "profile", "link", "star", "join", "full_subcomplex",
    "minimal_missing_faces", "core_decomposition",
    "simplex", "simplex_boundary", "points", "cycle", "cone", "suspension",
    "rp2_6",
]


def _face_key(f: Face):
    return (len(f), f)


def _closure(facets: Iterable[Face]) -> set:
    out = {()}
    for f in facets:
        if f in out:
            continue
        for k in range(len(f) + 1):
            out.update(combinations(f, k))
    return out


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Downward-closed family of faces of ``{1..m}`` containing the empty face.

    ``labels[i-1]`` is the provenance label of vertex ``i`` (identity unless
    the complex was compacted or built by a join).
    """

    m: int
    faces: tuple
    labels: tuple = field(default=None)
    _faceset: frozenset = field(default=None, repr=False)

    def __post_init__(self):
        if not self.faces or self.faces[0] != ():
            raise ValueError("a complex must contain the empty face")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(1, self.m + 1)))
        if self._faceset is None:
            object.__setattr__(self, "_faceset", frozenset(self.faces))

    @classmethod
    def _make(cls, m: int, faces: Iterable[Face], labels=None) -> SimplicialComplex:
        fs = sorted(set(faces), key=_face_key)
        return cls(m, tuple(fs), tuple(labels) if labels is not None else None)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self._faceset == other._faceset

    def __hash__(self):
        return hash((self.m, self._faceset))

    def __contains__(self, face) -> bool:
        return tuple(face) in self._faceset

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    @property
    def dim(self) -> int:
        return len(self.faces[-1]) - 1

    @property
    def n(self) -> int:
        """Order of the largest face, ``dim + 1``."""
        return len(self.faces[-1])

    @property
    def vertices(self) -> tuple:
        """Labels actually carrying a vertex ``(i,) in K``."""
        return tuple(f[0] for f in self.faces if len(f) == 1)

    @property
    def ghosts(self) -> tuple:
        used = set(self.vertices)
        return tuple(i for i in range(1, self.m + 1) if i not in used)

    def faces_of_order(self, k: int) -> list:
        return [f for f in self.faces if len(f) == k]

    @property
    def facets(self) -> tuple:
        """Maximal faces, canonical order."""
        fs = self._faceset
        out = []
        for f in self.faces:
            if not any(tuple(sorted(f + (v,))) in fs
                       for v in range(1, self.m + 1) if v not in f):
                out.append(f)
        return tuple(out)

    def f_vector(self) -> FVector:
        counts = [0] * (self.n + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return FVector(tuple(counts))

    def is_pure(self) -> bool:
        return all(len(f) == self.n for f in self.facets)

    def compact(self) -> SimplicialComplex:
        """Drop ghost labels, renumber used vertices ``1..m'`` in order."""
        used = self.vertices
        new = {v: i + 1 for i, v in enumerate(used)}
        faces = [tuple(new[v] for v in f) for f in self.faces]
        return SimplicialComplex._make(len(used), faces, [self.labels[v - 1] for v in used])

    def in_original_labels(self, m: int | None = None) -> SimplicialComplex:
        """Rewrite faces in provenance labels; requires labels to be positive ints."""
        faces = []
        for f in self.faces:
            g = tuple(sorted(self.labels[v - 1] for v in f))
            if len(set(g)) != len(g):
                raise ValueError(f"labels collide on face {f}")
            faces.append(g)
        if m is None:
            m = max(self.labels, default=0)
        return from_facets(m, faces)

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, facets={list(self.facets)})"


class FVector(NamedTuple):
    """``counts[k]`` = number of faces with ``k`` vertices (``counts[0] == 1``)."""

    counts: tuple

    def __getitem__(self, i):
        # f_{-1} is counts[0]
        return self.counts[i + 1]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)


class Profile(NamedTuple):
    dim: int
    n: int
    f_vector: tuple
    is_pure: bool
    vertices: tuple


class CoreDecomposition(NamedTuple):
    apex: tuple
    core: SimplicialComplex
    is_reduced: bool


def from_facets(m: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of ``facets`` on the vertex labels ``1..m``."""
    if m < 0:
        raise ValueError("negative vertex count")
    clean = []
    for f in facets:
        f = list(f)
        if len(set(f)) != len(f):
            raise ValueError(f"duplicate vertex in facet {f}")
        for v in f:
            if not isinstance(v, int) or not 1 <= v <= m:
                raise ValueError(f"vertex label {v!r} outside 1..{m}")
        clean.append(tuple(sorted(f)))
    return SimplicialComplex._make(m, _closure(clean))


def profile(K: SimplicialComplex) -> Profile:
    return Profile(K.dim, K.n, tuple(K.f_vector()), K.is_pure(), K.vertices)


def _check_face(K, sigma) -> Face:
    s = tuple(sorted(sigma))
    if s not in K:
        raise ValueError(f"{s} is not a face")
    return s


def link(K: SimplicialComplex, sigma: Iterable[int] = ()) -> SimplicialComplex:
    s = _check_face(K, sigma)
    ss = set(s)
    faces = [tuple(v for v in t if v not in ss) for t in K.faces if ss.issubset(t)]
    return SimplicialComplex._make(K.m, faces, K.labels)


def star(K: SimplicialComplex, sigma: Iterable[int] = ()) -> SimplicialComplex:
    s = _check_face(K, sigma)
    faces = [t for t in K.faces if tuple(sorted(set(t) | set(s))) in K]
    return SimplicialComplex._make(K.m, faces, K.labels)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join with the labels of ``L`` shifted past those of ``K``."""
    sh = K.m
    faces = [s + tuple(v + sh for v in t) for s in K.faces for t in L.faces]
    return SimplicialComplex._make(K.m + L.m, faces, K.labels + L.labels)


def full_subcomplex(K: SimplicialComplex, tau: Iterable[int]) -> SimplicialComplex:
    """Faces of ``K`` avoiding every vertex of ``tau`` (same labels)."""
    tau = set(tau)
    for v in tau:
        if not 1 <= v <= K.m:
            raise ValueError(f"vertex label {v!r} outside 1..{K.m}")
    faces = [f for f in K.faces if tau.isdisjoint(f)]
    return SimplicialComplex._make(K.m, faces, K.labels)


def minimal_missing_faces(K: SimplicialComplex) -> list:
    fs = K._faceset
    cands = set()
    for f in K.faces:
        for v in range(1, K.m + 1):
            if v not in f:
                g = tuple(sorted(f + (v,)))
                if g not in fs:
                    cands.add(g)
    out = [g for g in cands
           if all(g[:i] + g[i + 1:] in fs for i in range(len(g)))]
    return sorted(out, key=_face_key)


def core_decomposition(K: SimplicialComplex) -> CoreDecomposition:
    """Split ``K = simplex(apex) * core`` with the core free of cone points."""
    apex = tuple(v for v in K.vertices if star(K, (v,)) == K)
    L = full_subcomplex(K, apex)
    return CoreDecomposition(apex, L, not apex)


# -- named families --------------------------------------------------------

def simplex(vertices: int | Sequence[int]) -> SimplicialComplex:
    """Full simplex on ``1..k`` (int) or on an explicit label set."""
    if isinstance(vertices, int):
        return from_facets(vertices, [range(1, vertices + 1)])
    vs = tuple(sorted(vertices))
    K = from_facets(len(vs), [range(1, len(vs) + 1)])
    return SimplicialComplex._make(K.m, K.faces, vs)


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-simplex, on ``d + 1`` vertices."""
    if d < 0:
        raise ValueError("dimension must be >= 0")
    return from_facets(d + 1, combinations(range(1, d + 2), d))


def points(m: int) -> SimplicialComplex:
    return from_facets(m, [(i,) for i in range(1, m + 1)])


def cycle(m: int) -> SimplicialComplex:
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_facets(m, [(i, i % m + 1) for i in range(1, m + 1)])


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex ``m + 1``."""
    J = join(K, points(1))
    return SimplicialComplex._make(J.m, J.faces)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Join with two points, labelled ``m + 1`` and ``m + 2``."""
    J = join(K, points(2))
    return SimplicialComplex._make(J.m, J.faces)


RP2_6_FACETS = (
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
)


def rp2_6() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane."""
    return from_facets(6, RP2_6_FACETS)
