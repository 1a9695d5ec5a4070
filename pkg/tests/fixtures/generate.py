"""Regenerate the JSON fixture corpus: python3 tests/fixtures/generate.py"""

from pathlib import Path

import numpy as np

from finite2groups import io
from finite2groups.classification import identity_hom, enumerate_homs, transport
from finite2groups.cohomology import (
    Module,
    cochain_from_function,
    cohomology_group,
    differential,
)
from finite2groups.finite_algebra import (
    FinAbGroup,
    cyclic_group,
    symmetric_group,
    trivial_action,
    trivial_group,
    validate_action,
    validate_hom,
)
from finite2groups.monoidal_groupoid import builder_choice, groupoid_from_quadruple, skeletal_groupoid
from finite2groups.twogroups import (
    aut2group,
    central_extension_crossed,
    crossed_to_strict,
    strict_quadruple,
    trivial_t_crossed,
    validate_quadruple,
)

HERE = Path(__file__).parent


def corpus():
    Z2, Z3, Z4, S3 = cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)
    A2, A3 = FinAbGroup((2,)), FinAbGroup((3,))
    out = {
        "trivial_group": trivial_group().to_json(),
        "z2": Z2.to_json(),
        "z3": Z3.to_json(),
        "z4": Z4.to_json(),
        "s3": S3.to_json(),
        "z2_ab": A2.to_json(),
        "z3_ab": A3.to_json(),
        "z2z2_ab": FinAbGroup((2, 2)).to_json(),
        "trivial_ab": FinAbGroup(()).to_json(),
        "triv_z2_z2": trivial_action(Z2, A2).to_json(),
        "triv_z3_z3": trivial_action(Z3, A3).to_json(),
        "triv_z2_z2z2": trivial_action(Z2, FinAbGroup((2, 2))).to_json(),
        "triv_1_z2": trivial_action(trivial_group(), A2).to_json(),
        "neg_z2_z3": validate_action(Z2, A3, [[0, 1, 2], [0, 2, 1]]).to_json(),
    }
    M2 = Module(Z2, A2, trivial_action(Z2, A2))
    M3 = Module(Z3, A3, trivial_action(Z3, A3))
    a2 = cohomology_group(M2, 3).cocycle((1,))
    a3 = cohomology_group(M3, 3).cocycle((1,))
    q2_0 = strict_quadruple(Z2, A2)
    q2_1 = validate_quadruple(Z2, A2, M2.action, a2)
    q3_0 = strict_quadruple(Z3, A3)
    q3_1 = validate_quadruple(Z3, A3, M3.action, a3)
    # relabel by the automorphism g -> 2g of Z/3
    phi = [0, 2, 1]
    q3_1r = validate_quadruple(Z3, A3, M3.action, transport(a3, phi, tuple(range(3)), M3))
    k0 = cochain_from_function(M3, 2, lambda g, h: (int(g == h == 1),))
    q3_exact = validate_quadruple(Z3, A3, M3.action, differential(k0))
    out.update({
        "a3_z2": a2.to_json(),
        "a3_z3": a3.to_json(),
        "q_z2_zero": q2_0.to_json(),
        "q_z2_nonzero": q2_1.to_json(),
        "q_z3_zero": q3_0.to_json(),
        "q_z3_nonzero": q3_1.to_json(),
        "q_z3_relabeled": q3_1r.to_json(),
        "q_z3_exact": q3_exact.to_json(),
    })
    M, choice = groupoid_from_quadruple(q3_1)
    out["groupoid_z3"] = M.to_json()
    out["choices_z3"] = choice.to_json()
    out["choices_z3_scrambled"] = builder_choice(Z3, A3, a3, u=[0, 0, 0], v=[1, 1, 1]).to_json()
    bad = np.zeros((3, 3, 3), dtype=np.int64)
    bad[1, 1, 1] = 1
    out["bad_groupoid"] = skeletal_groupoid(Z3, A3, M3.action, bad).to_json()
    out["cm_trivial_t"] = trivial_t_crossed(Z2, A3, [[0, 1, 2], [0, 2, 1]]).to_json()
    out["cm_aut_s3"] = aut2group(S3).to_json()
    out["cm_z4_z2"] = central_extension_crossed(validate_hom(Z4, Z2, [0, 1, 0, 1])).to_json()
    out["cm_not_peiffer"] = {"kind": "crossed_module", "G": trivial_group().to_json(),
                             "H": S3.to_json(), "t": [0] * 6,
                             "alpha": {"kind": "action", "perms": [list(range(6))]}}
    out["strict_z4_z2"] = crossed_to_strict(
        central_extension_crossed(validate_hom(Z4, Z2, [0, 1, 0, 1]))).to_json()
    homs = enumerate_homs(q2_0, q2_0)
    out["hom_z2_id"] = identity_hom(q2_0).to_json()
    out["hom_z2_k"] = next(h for h in homs if h.phi.map == (0, 1) and h.psi == (0, 1)
                           and not h.k.is_zero()).to_json()
    return out


def main():
    for name, obj in corpus().items():
        (HERE / f"{name}.json").write_text(io.dumps(obj))


if __name__ == "__main__":
    main()
