"""Named test complexes and the seeded random corpus."""

from __future__ import annotations

import random

from .complex import (
    SimplicialComplex, cone, cycle, from_facets, join, points, rp2_6, simplex,
    simplex_boundary, suspension,
)
from .criteria import random_complex

__all__ = ["named_corpus", "random_corpus", "DEFAULT_SEED"]

DEFAULT_SEED = 20240611


def named_corpus() -> dict[str, SimplicialComplex]:
    out = {
        "empty": from_facets(0, []),
        "boundary2": simplex_boundary(2),
        "boundary3": simplex_boundary(3),
        "boundary4": simplex_boundary(4),
        "simplex2": simplex(3),
        "cone_boundary2": cone(simplex_boundary(2)),
        "rp2_6": rp2_6(),
        "path2": from_facets(3, [(1, 2), (2, 3)]),
        "path3": from_facets(4, [(1, 2), (2, 3), (3, 4)]),
        "two_edges": from_facets(4, [(1, 2), (3, 4)]),
        "edge_triangle": from_facets(4, [(1, 2, 3), (3, 4)]),
        "cycle5": cycle(5),
        "octahedron": suspension(cycle(4)),
        "suspension_points3": suspension(points(3)),
        "join_boundary2_boundary2": join(simplex_boundary(2), simplex_boundary(2)),
        "ghost_edge": from_facets(3, [(1, 3)]),
    }
    for m in range(1, 5):
        out[f"points{m}"] = points(m)
    return out


def random_corpus(count: int = 200, seed: int = DEFAULT_SEED, max_m: int = 6) -> list[SimplicialComplex]:
    """``count`` seeded random complexes on at most ``max_m`` vertices."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(1, max_m)
        density = rng.choice((0.15, 0.3, 0.45, 0.6, 0.75))
        out.append(random_complex(m, density, rng.randrange(2**31)))
    return out
