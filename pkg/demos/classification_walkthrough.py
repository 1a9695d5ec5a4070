"""Homomorphisms, 2-cells and equivalence classes of small 2-groups.

    python3 demos/classification_walkthrough.py
"""

from finite2groups.classification import (
    count_equivalence_classes,
    derive_F_minus1,
    enumerate_2homs,
    enumerate_homs,
    equivalence_orbits,
    equivalent,
    strictify_if_coboundary,
)
from finite2groups.cohomology import Module, cohomology_group
from finite2groups.finite_algebra import FinAbGroup, cyclic_group, trivial_action
from finite2groups.twogroups import strict_quadruple, validate_quadruple

Z2, H2 = cyclic_group(2), FinAbGroup((2,))
q = strict_quadruple(Z2, H2)
homs = enumerate_homs(q, q)
print(f"{len(homs)} special homomorphisms from the strict (Z2, Z2) 2-group to itself")
for F in homs[:3]:
    cells = enumerate_2homs(F, F)
    print(f"  phi={F.phi.map} psi={F.psi}: {len(cells)} 2-cells F => F, F_-1 = {derive_F_minus1(F)}")

for n in (2, 3, 4):
    G, H = cyclic_group(n), FinAbGroup((n,))
    act = trivial_action(G, H)
    print(f"(Z{n}, Z{n}, trivial): {count_equivalence_classes(G, H, act)} classes,"
          f" orbits {equivalence_orbits(G, H, act)}")

M = Module.trivial(Z2, H2)
nonzero = validate_quadruple(Z2, H2, M.action, cohomology_group(M, 3).cocycle((1,)))
print("\nzero vs nonzero class equivalent:", equivalent(q, nonzero))
print("strict model for the nonzero class:", strictify_if_coboundary(nonzero))
