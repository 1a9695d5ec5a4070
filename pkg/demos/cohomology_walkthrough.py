"""Third cohomology of cyclic groups, and what a class looks like as a table.

    python3 demos/cohomology_walkthrough.py
"""

from finite2groups.cohomology import (
    Module,
    cochain_from_vector,
    cohomology_group,
    differential,
    is_cocycle,
)
from finite2groups.finite_algebra import FinAbGroup, cyclic_group

for n in (2, 3, 4, 6):
    G, H = cyclic_group(n), FinAbGroup((n,))
    Hc = cohomology_group(Module.trivial(G, H), 3)
    print(f"H^3(Z{n}, Z{n}) has order {Hc.order}, invariant factors {list(Hc.invariant_factors)}")

# the generator for Z3, printed as a(g, h, k) with g, h, k in {0, 1, 2}
M = Module.trivial(cyclic_group(3), FinAbGroup((3,)))
Hc = cohomology_group(M, 3)
a = Hc.cocycle((1,))
print("\nrepresentative of the generator of H^3(Z3, Z3):")
for g in range(3):
    print("  ", [[int(a(g, h, k)[0]) for k in range(3)] for h in range(3)])
print("closed:", is_cocycle(a), " class coordinates:", Hc.project(a))

# adding a coboundary moves the table but not the class
shifted = a + differential(cochain_from_vector(M, 2, [1, 0, 2, 1]))
print("after adding a coboundary, coordinates:", Hc.project(shifted), " equal tables:", shifted == a)
