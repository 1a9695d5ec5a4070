"""Build a skeletal monoidal groupoid, break its inverse data and repair it.

    python3 demos/improvement_walkthrough.py
"""

from finite2groups.cohomology import Module, cohomology_group
from finite2groups.finite_algebra import FinAbGroup, cyclic_group
from finite2groups.monoidal_groupoid import (
    InverseChoice,
    check_zigzags,
    first_failure,
    groupoid_from_quadruple,
    improve,
    skeletal_groupoid,
)
from finite2groups.twogroups import validate_quadruple

G, H = cyclic_group(3), FinAbGroup((3,))
M = Module.trivial(G, H)
q = validate_quadruple(G, H, M.action, cohomology_group(M, 3).cocycle((1,)))
Mg, choice = groupoid_from_quadruple(q)
print(f"{Mg.n_objects} objects, {Mg.n_morphisms} morphisms; coherence failure: {first_failure(Mg)}")
print("builder choice (xbar, i_x, e_x):", choice.entries)
print("zig-zags per object:", [check_zigzags(Mg, choice, x) for x in range(3)])

# a non-closed associator is caught by the pentagon
bad = q.a.values.copy()
bad[1, 1, 1, 0] = (bad[1, 1, 1, 0] + 1) % 3
print("\nperturbed associator:", first_failure(skeletal_groupoid(G, H, M.action, bad)))

# keep xbar and e_x but pick the wrong unit; improve rebuilds i_x
scrambled = InverseChoice(tuple((xb, (i + 1) % 3, e) for xb, i, e in choice.entries))
print("\nscrambled zig-zags:", [check_zigzags(Mg, scrambled, x) for x in range(3)])
better = improve(Mg, scrambled)
print("improved choice:", better.entries)
print("improved zig-zags:", [check_zigzags(Mg, better, x) for x in range(3)])
