"""Points and sphere boundaries: the base cases.

Every set of points is Cohen-Macaulay, but only two points form a sphere.
Boundaries of simplices are Gorenstein*, and their quotient algebras are
palindromic with a one-dimensional top degree.
"""

from facering.complex import points, simplex_boundary
from facering.criteria import classify
from facering.linalg import GF2, QQ
from facering.regularity import quotient_algebra


def show(label, K, F):
    vs = {v.property: v.value for v in classify(K, F)}
    A = quotient_algebra(K, F)
    print(f"{label:<14} {F.name:<3} CM={vs['CM']!s:<5} G*={vs['GorensteinStar']!s:<5} dims={A.dims}")


for m in range(1, 6):
    show(f"points({m})", points(m), QQ)
for n in (2, 3, 4):
    show(f"boundary({n})", simplex_boundary(n), GF2)
