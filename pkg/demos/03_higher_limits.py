"""Higher limits of the canonical functors on the face poset.

The constant functor recovers the cohomology of K, the atomic functor
shifts it by one, and the degree-d star functor has only lim^0 for d > 0.
"""

from facering.complex import cone, simplex_boundary
from facering.homology import cohomology_dims
from facering.limits import atomic_chain, star_identity, star_limit_dims
from facering.linalg import GF3

for label, K in [("circle", simplex_boundary(2)), ("2-sphere", simplex_boundary(3)),
                 ("cone", cone(simplex_boundary(2)))]:
    print(label, "H^*:", cohomology_dims(K, GF3))
    for d in range(4):
        r = star_identity(K, GF3, d)
        print(f"  star d={d}: lim={star_limit_dims(K, GF3, d)} {'PASS' if r.ok else 'FAIL'}")
    print("  constant vs atomic chain:", "PASS" if atomic_chain(K, GF3).ok else "FAIL")
