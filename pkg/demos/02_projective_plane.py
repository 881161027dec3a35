"""The six-vertex projective plane depends on the characteristic.

Over F2 the mod-2 homology sees the non-orientable surface, so both routes
reject Cohen-Macaulayness and the Koszul complex has a nonzero Tor^{-1}.
Over F3 and Q it is Cohen-Macaulay.
"""

from facering.complex import rp2_6
from facering.criteria import classify
from facering.linalg import GF2, GF3, QQ
from facering.regularity import koszul_tor_dims

K = rp2_6()
for F in (GF2, GF3, QQ):
    cm = next(v for v in classify(K, F) if v.property == "CM")
    print(f"{F.name:<3} CM={cm.value!s:<5} topological witness={cm.topological.witness} "
          f"algebraic witness={cm.algebraic.witness}")

tor = koszul_tor_dims(K, GF2, 9)
print("Tor^-1 over f2 by degree:", tor.row(1))
