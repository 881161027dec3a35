"""Cohen-Macaulay and Gorenstein tests for Stanley-Reisner rings.

Two independent routes decide each property over GF(p) or Q: cohomology of
links, and the quotient of the face ring by the elementary symmetric
parameters.  The routes are cross-checked against each other.  A separate
module computes higher derived limits over the face poset.
"""

from .complex import (
    SimplicialComplex, from_facets, profile, link, star, join, full_subcomplex,
    minimal_missing_faces, core_decomposition, simplex, simplex_boundary, points,
    cycle, cone, suspension, rp2_6,
)
from .linalg import FieldSpec, GF2, GF3, QQ, ExactMatrix
from .homology import reduced_cohomology_dims, cohomology_dims
from .face_ring import HilbertSeries, hilbert_series, monomial_basis
from .regularity import (
    QuotientAlgebra, quotient_algebra, freeness_check, socle_dims, pd_check,
    koszul_tor_dims, ambient_quotient_dims, default_d_max,
)
from .criteria import (
    Verdict, RouteDisagreement, reisner_check, spherical_check, classify,
    cross_validate, random_complex,
)
from .limits import (
    PosetFunctor, build_normalized_complex, higher_limit_dims, canonical_functors,
)
from .io import ComplexDocument

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex", "from_facets", "profile", "link", "star", "join",
    "full_subcomplex", "minimal_missing_faces", "core_decomposition", "simplex",
    "simplex_boundary", "points", "cycle", "cone", "suspension", "rp2_6",
    "FieldSpec", "GF2", "GF3", "QQ", "ExactMatrix",
    "reduced_cohomology_dims", "cohomology_dims",
    "HilbertSeries", "hilbert_series", "monomial_basis",
    "QuotientAlgebra", "quotient_algebra", "freeness_check", "socle_dims",
    "pd_check", "koszul_tor_dims", "ambient_quotient_dims", "default_d_max",
    "Verdict", "RouteDisagreement", "reisner_check", "spherical_check",
    "classify", "cross_validate", "random_complex",
    "PosetFunctor", "build_normalized_complex", "higher_limit_dims",
    "canonical_functors", "ComplexDocument", "__version__",
]
