from itertools import product

import pytest

from finite2groups.cohomology import Module, cochain_from_function, cohomology_group, zero_cochain
from finite2groups.errors import (
    EquivarianceFailed,
    KernelNotCentral,
    MismatchedModule,
    NotAbelian,
    NotCocycle,
    NotSurjective,
    PeifferFailed,
    StrictLawFailed,
)
from finite2groups.finite_algebra import (
    FinAbGroup,
    conjugation_action,
    cyclic_group,
    direct_product,
    enumerate_actions,
    symmetric_group,
    trivial_action,
    trivial_group,
    validate_hom,
)
from finite2groups.monoidal_groupoid import (
    groupoid_to_quadruple,
    strict_to_groupoid,
    validate_monoidal_groupoid,
)
from finite2groups.twogroups import (
    _default_comp,
    aut2group,
    central_extension_crossed,
    crossed_modules_isomorphic,
    crossed_to_strict,
    identity_crossed,
    strict_quadruple,
    strict_to_crossed,
    trivial_t_crossed,
    validate_crossed_module,
    validate_quadruple,
    validate_strict_two_group,
)

Z2, Z3, Z4, S3 = cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)
Z6 = cyclic_group(6)


def builder_corpus():
    """Every builder output with |G|, |H| <= 6."""
    out = [aut2group(H) for H in (trivial_group(), Z2, Z3, Z4, S3)]
    out += [identity_crossed(G) for G in (trivial_group(), Z2, Z3, Z4, S3, Z6)]
    out.append(central_extension_crossed(validate_hom(Z4, Z2, [0, 1, 0, 1])))
    out.append(central_extension_crossed(validate_hom(Z6, Z3, [0, 1, 2, 0, 1, 2])))
    out.append(central_extension_crossed(validate_hom(Z6, Z2, [0, 1, 0, 1, 0, 1])))
    groups = (trivial_group(), Z2, Z3, Z4, direct_product(Z2, Z2), S3)
    for G in groups:
        for factors in ((), (2,), (3,), (4,), (2, 2), (5,), (6,)):
            H = FinAbGroup(factors)
            for a in enumerate_actions(G, H):
                out.append(trivial_t_crossed(G, H, a))
    return out


CORPUS = builder_corpus()


def test_validate_examples():
    validate_crossed_module(Z2, Z2, [0, 0], trivial_action(Z2, Z2).perms)
    with pytest.raises(PeifferFailed) as exc:
        validate_crossed_module(trivial_group(), S3, [0] * 6, [list(range(6))])
    h, h2 = exc.value.witness
    assert S3.mul(h, h2) != S3.mul(h2, h)
    validate_crossed_module(S3, S3, list(range(6)), conjugation_action(S3))


def test_equivariance_failure():
    # identity t on S3 with the trivial action
    with pytest.raises(EquivarianceFailed) as exc:
        validate_crossed_module(S3, S3, list(range(6)), [list(range(6))] * 6)
    g, h = exc.value.witness
    assert S3.conj(g, h) != h


def test_crossed_to_strict_examples():
    st = crossed_to_strict(trivial_t_crossed(trivial_group(), FinAbGroup(()), [[0]]))
    assert st.C1.order == 1
    st = crossed_to_strict(trivial_t_crossed(Z2, FinAbGroup((2,)), [[0, 1], [0, 1]]))
    assert st.C1.order == 4 and st.C1.is_abelian and st.C1.exponent == 2
    assert st.s.map == st.t.map == (0, 0, 1, 1)
    st = crossed_to_strict(identity_crossed(Z3))
    assert st.C1.order == 9
    for h, g in product(range(3), repeat=2):
        x = h + 3 * g
        assert st.s(x) == g and st.t(x) == Z3.mul(h, g)


@pytest.mark.parametrize("cm", CORPUS, ids=lambda c: f"G{c.G.order}-H{c.H.order}")
def test_round_trip(cm):
    st = crossed_to_strict(cm)
    # the composition table is the one forced by the group structure
    assert st.comp == _default_comp(st.C1, st.s, st.t, st.i)
    back = strict_to_crossed(st)
    # G matches identically and H through h -> (h, 1)
    assert back.G == cm.G
    assert back.H.table == cm.H.table
    assert back.t.map == cm.t.map
    assert back.alpha.perms == cm.alpha.perms
    assert crossed_modules_isomorphic(back, cm) is not None


def test_isomorphism_search_rejects():
    a = trivial_t_crossed(Z2, FinAbGroup((3,)), [[0, 1, 2], [0, 2, 1]])
    b = trivial_t_crossed(Z2, FinAbGroup((3,)), [[0, 1, 2], [0, 1, 2]])
    assert crossed_modules_isomorphic(a, b) is None
    assert crossed_modules_isomorphic(identity_crossed(Z2), trivial_t_crossed(
        Z2, FinAbGroup((2,)), [[0, 1], [0, 1]])) is None


def test_strict_to_crossed_examples():
    V = direct_product(Z2, Z2)  # (a, b) at a + 2b
    st = validate_strict_two_group(Z2, V, [0, 0, 1, 1], [0, 0, 1, 1], [0, 2])
    cm = strict_to_crossed(st)
    assert cm.H.order == 2 and cm.t.map == (0, 0) and cm.alpha.perms == ((0, 1), (0, 1))
    assert strict_to_crossed(crossed_to_strict(identity_crossed(trivial_group()))).H.order == 1


def test_strict_law_failures():
    V = direct_product(Z2, Z2)
    with pytest.raises(StrictLawFailed):
        validate_strict_two_group(Z2, V, [0, 0, 1, 1], [0, 0, 1, 1], [0, 1])
    good = validate_strict_two_group(Z2, V, [0, 0, 1, 1], [0, 0, 1, 1], [0, 2])
    comp = [list(r) for r in good.comp]
    comp[1][1] = 1  # breaks the identity law
    with pytest.raises(StrictLawFailed):
        validate_strict_two_group(Z2, V, [0, 0, 1, 1], [0, 0, 1, 1], [0, 2], comp)
    sparse = good.to_json()["comp"]
    assert validate_strict_two_group(Z2, V, [0, 0, 1, 1], [0, 0, 1, 1], [0, 2], sparse) == good


def test_aut2group_examples():
    cm = aut2group(Z3)
    assert cm.G.order == 2 and set(cm.t.map) == {0}
    assert aut2group(trivial_group()).G.order == 1
    cm = aut2group(S3)
    assert cm.G.order == 6 and len(set(cm.t.map)) == 6


def test_central_extension_examples():
    cm = central_extension_crossed(validate_hom(Z4, Z2, [0, 1, 0, 1]))
    assert all(p == tuple(range(4)) for p in cm.alpha.perms)
    sign = [0 if S3.element_orders[g] != 2 else 1 for g in range(6)]
    with pytest.raises(KernelNotCentral):
        central_extension_crossed(validate_hom(S3, Z2, sign))
    with pytest.raises(NotSurjective):
        central_extension_crossed(validate_hom(Z2, Z4, [0, 2]))
    cm = central_extension_crossed(validate_hom(S3, S3, list(range(6))))
    assert cm.alpha.perms == conjugation_action(S3).perms


def test_trivial_t_examples():
    trivial_t_crossed(Z2, FinAbGroup((3,)), [[0, 1, 2], [0, 2, 1]])
    trivial_t_crossed(S3, FinAbGroup(()), [[0]] * 6)
    with pytest.raises(NotAbelian):
        trivial_t_crossed(Z2, S3, [list(range(6))] * 2)


def test_skeletal_strict_gives_zero_associator():
    for cm in CORPUS:
        if set(cm.t.map) != {0} or cm.H.order > 4 or cm.G.order > 4:
            continue
        st = crossed_to_strict(cm)
        assert st.is_skeletal
        M = validate_monoidal_groupoid(strict_to_groupoid(st))
        q = groupoid_to_quadruple(M)
        assert q.a.is_zero()
        assert q.alpha.perms == cm.alpha.perms


def test_quadruple_validation():
    M = Module.trivial(Z3, FinAbGroup((3,)))
    a = cohomology_group(M, 3).cocycle((1,))
    q = validate_quadruple(Z3, FinAbGroup((3,)), M.action, a)
    assert q.to_json()["kind"] == "two_group"
    nc = cochain_from_function(M, 3, lambda g, h, k: (int(g == h == k == 1),))
    with pytest.raises(NotCocycle):
        validate_quadruple(Z3, FinAbGroup((3,)), M.action, nc)
    with pytest.raises(MismatchedModule):
        validate_quadruple(Z3, FinAbGroup((3,)), M.action, zero_cochain(M, 2))
    assert strict_quadruple(Z3, FinAbGroup((3,))).a.is_zero()
