"""Reduced simplicial cohomology over an exact field.

The cochain complex is augmented: degree ``-1`` has the single basis element
``()`` and ``delta_{-1}`` sends it to the sum of the vertices.  In ``delta_d``
the row of a face ``tau`` has entry ``(-1)**k`` in the column of ``tau`` with
its ``k``-th vertex removed (vertices in ascending order, ``k`` from 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complex import SimplicialComplex
from .linalg import ExactMatrix, FieldSpec, rank_of_rows

__all__ = [
    "CochainComplexData", "coboundary_matrices", "reduced_cohomology_dims",
    "cohomology_dims", "reduced_euler_characteristic",
]


@dataclass(frozen=True)
class CochainComplexData:
    """``bases[d]`` lists faces of order ``d + 1``; ``delta[d]`` maps degree d to d+1."""

    field: FieldSpec
    bases: dict
    delta: dict

    @property
    def degrees(self) -> range:
        return range(-1, max(self.bases) + 1)

    def check_square_zero(self) -> bool:
        for d in self.degrees:
            if d + 1 in self.delta and d in self.delta:
                if not (self.delta[d + 1] @ self.delta[d]).is_zero():
                    return False
        return True


def _coboundary_rows(K: SimplicialComplex, d: int) -> list[dict]:
    """Rows (faces of order d+2) of delta_d as sparse signed dicts."""
    src = {f: j for j, f in enumerate(K.faces_of_order(d + 1))}
    rows = []
    for tau in K.faces_of_order(d + 2):
        r = {}
        for k in range(len(tau)):
            r[src[tau[:k] + tau[k + 1:]]] = -1 if k % 2 else 1
        rows.append(r)
    return rows


def coboundary_matrices(K: SimplicialComplex, field: FieldSpec) -> CochainComplexData:
    bases = {d: K.faces_of_order(d + 1) for d in range(-1, K.dim + 1)}
    delta = {}
    for d in range(-1, K.dim):
        delta[d] = ExactMatrix.from_sparse(_coboundary_rows(K, d), len(bases[d]), field)
    return CochainComplexData(field, bases, delta)


@lru_cache(maxsize=4096)
def _reduced_dims(K: SimplicialComplex, field: FieldSpec) -> tuple:
    ranks = {d: rank_of_rows(_coboundary_rows(K, d), field) for d in range(-1, K.dim)}
    out = []
    for d in range(-1, K.dim + 1):
        c = len(K.faces_of_order(d + 1))
        out.append(c - ranks.get(d, 0) - ranks.get(d - 1, 0))
    return tuple(out)


def reduced_cohomology_dims(K: SimplicialComplex, field: FieldSpec) -> dict[int, int]:
    """``{d: dim H~^d(K; field)}`` for ``d = -1 .. dim K``."""
    return dict(zip(range(-1, K.dim + 1), _reduced_dims(K, field)))


def cohomology_dims(K: SimplicialComplex, field: FieldSpec) -> dict[int, int]:
    """Unreduced cohomology ``{d: dim H^d}``, ``d = 0 .. dim K``; empty for ``{()}``."""
    red = reduced_cohomology_dims(K, field)
    out = {d: red[d] for d in range(0, K.dim + 1)}
    if out:
        out[0] += 1
    return out


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** (len(f) - 1) for f in K.faces)
