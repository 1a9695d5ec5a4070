from itertools import product

import numpy as np
import pytest

from finite2groups.cohomology import (
    Module,
    closed_cochains,
    cochain_from_vector,
    cohomology_group,
    differential,
    is_cocycle,
    random_cochain,
)
from finite2groups.errors import (
    BoundExceeded,
    CategoryLawFailed,
    EndomorphismsNotAbelian,
    FunctorialityFailed,
    IllTypedChoice,
    NaturalityFailed,
    NotSkeletal,
    NotWeak2Group,
    PentagonFailed,
    TriangleFailed,
    UnitsNotIdentity,
)
from finite2groups.finite_algebra import (
    FinAbGroup,
    cyclic_group,
    symmetric_group,
    validate_action,
    validate_hom,
)
from finite2groups.monoidal_groupoid import (
    InverseChoice,
    MonoidalGroupoid,
    builder_choice,
    check_alt_iprime,
    check_zigzags,
    eckmann_hilton_check,
    find_weak_inverse,
    first_failure,
    groupoid_from_quadruple,
    groupoid_to_quadruple,
    improve,
    iprime,
    is_weak_2group,
    skeletal_groupoid,
    strict_to_groupoid,
    validate_monoidal_groupoid,
)
from finite2groups.twogroups import (
    aut2group,
    central_extension_crossed,
    crossed_to_strict,
    identity_crossed,
    strict_quadruple,
    validate_quadruple,
)
from conftest import quadruple
from oracles import inflate

Z2, Z3 = cyclic_group(2), cyclic_group(3)


def _neg_module():
    A = FinAbGroup((3,))
    return Module(Z2, A, validate_action(Z2, A, [[0, 1, 2], [0, 2, 1]]))


def _trivial_groupoid():
    return MonoidalGroupoid([[1]], [[0]], 0, [[0]], [[0]], [[[0]]], [0], [0])


def _discrete_monoid():
    """Objects {1, m} with m m = m and only identity morphisms."""
    T = [[0, 1], [1, 1]]
    assoc = [[[0, 1], [1, 1]], [[1, 1], [1, 1]]]
    return MonoidalGroupoid(np.eye(2, dtype=int), [[0, -1], [-1, 1]], 0, T, T, assoc,
                            [0, 1], [0, 1])


def _one_object(G, tensor):
    """One object with End(1) = G under composition and the given tensor table."""
    n = G.order
    return MonoidalGroupoid([[n]], G.table, 0, [[0]], tensor, [[[0]]], [0], [0])


def _random_choice(M, rng):
    entries = []
    u = M.unit
    for x in range(M.n_objects):
        cands = [y for y in range(M.n_objects)
                 if len(M.hom(u, M.obj_tensor(x, y))) and len(M.hom(M.obj_tensor(y, x), u))]
        y = int(rng.choice(cands))
        i = int(rng.choice(list(M.hom(u, M.obj_tensor(x, y)))))
        e = int(rng.choice(list(M.hom(M.obj_tensor(y, x), u))))
        entries.append((y, i, e))
    return InverseChoice(tuple(entries))


def _sweep_choice(M, choice):
    """Every invariant of the improvement procedure for one choice."""
    for x in range(M.n_objects):
        first, second = check_zigzags(M, choice, x)
        assert first == second
        assert check_alt_iprime(M, choice, x)
    better = improve(M, choice)
    for x in range(M.n_objects):
        assert check_zigzags(M, better, x) == (True, True)
        assert better[x][0] == choice[x][0] and better[x][2] == choice[x][2]
    assert improve(M, better) == better


def _non_skeletal():
    out = [inflate(groupoid_from_quadruple(quadruple(3, 1))[0]),
           inflate(groupoid_from_quadruple(quadruple(2, 1))[0], copies=3)]
    for cm in (identity_crossed(symmetric_group(3)), aut2group(Z3),
               central_extension_crossed(validate_hom(cyclic_group(4), Z2, [0, 1, 0, 1]))):
        out.append(strict_to_groupoid(crossed_to_strict(cm)))
    return out


# ---------------------------------------------------------------------------
# validation


def test_trivial_groupoid():
    M = validate_monoidal_groupoid(_trivial_groupoid())
    assert is_weak_2group(M) and eckmann_hilton_check(M)
    assert find_weak_inverse(M, 0) == (0, 0, 0)
    choice = InverseChoice(((0, 0, 0),))
    assert improve(M, choice) == choice
    assert check_alt_iprime(M, choice, 0)


def test_builder_examples():
    M, choice = groupoid_from_quadruple(quadruple(2, 1))
    validate_monoidal_groupoid(M)
    # End(1) holds morphisms 0..|H|-1; e_g sits at a(g,g,g) = 1
    assert choice[1] == (1, 0, 1)
    M0, choice0 = groupoid_from_quadruple(quadruple(2))
    assert all(e == 0 and i == 0 for _, i, e in choice0)
    for q in (quadruple(2, 1), quadruple(3, 1), quadruple(3, 2)):
        M, choice = groupoid_from_quadruple(q)
        assert is_weak_2group(M) and eckmann_hilton_check(M)
        for x in range(M.n_objects):
            assert check_zigzags(M, choice, x) == (True, True)
            assert find_weak_inverse(M, x)[0] == q.G.inverses[x]


def test_builder_tensor_formula():
    M, _ = groupoid_from_quadruple(validate_quadruple(
        Z2, FinAbGroup((3,)), _neg_module().action,
        cohomology_group(_neg_module(), 3).cocycle(())))
    k = 3
    for x, y, h, h2 in product(range(2), range(2), range(3), range(3)):
        act = h2 if x == 0 else (-h2) % 3
        assert M.tensor(x * k + h, y * k + h2) == ((x + y) % 2) * k + (h + act) % 3


def test_non_cocycle_fails_pentagon_with_witness():
    M3 = Module.trivial(Z3, FinAbGroup((3,)))
    rng = np.random.default_rng(1)
    hits = 0
    for _ in range(30):
        a = random_cochain(M3, 3, rng)
        err = first_failure(skeletal_groupoid(Z3, FinAbGroup((3,)), M3.action, a))
        if is_cocycle(a):
            assert err is None
            continue
        hits += 1
        assert isinstance(err, PentagonFailed)
        assert differential(a)(*err.witness) != (0,)
    assert hits


@pytest.mark.parametrize("G,factors", [(Z2, (4,)), (Z2, (2, 2)), (Z3, (2,))])
def test_pentagon_iff_cocycle_exhaustive(G, factors):
    H = FinAbGroup(factors)
    M = Module.trivial(G, H)
    coords = M.coord_count(3)
    rel = [H.invariant_factors[j % H.rank] for j in range(coords)]
    for vec in product(*(range(r) for r in rel)):
        a = cochain_from_vector(M, 3, vec)
        passes = first_failure(skeletal_groupoid(G, H, M.action, a), laws=("pentagon",)) is None
        assert passes == is_cocycle(a)


def test_round_trip_through_tables():
    for q in (quadruple(2), quadruple(2, 1), quadruple(3, 1)):
        M, _ = groupoid_from_quadruple(q)
        assert groupoid_to_quadruple(M) == q
        assert MonoidalGroupoid.from_json(M.to_json()) == M
    M = _neg_module()
    for a in closed_cochains(M, 3):
        q = validate_quadruple(M.group, M.coeffs, M.action, a)
        assert groupoid_to_quadruple(groupoid_from_quadruple(q)[0]) == q


def test_reader_errors():
    with pytest.raises(NotSkeletal):
        groupoid_to_quadruple(inflate(groupoid_from_quadruple(quadruple(2))[0]))
    M, _ = groupoid_from_quadruple(quadruple(3))
    lunit = M.lunit.copy()
    lunit[1] = 3 + 1
    shifted = MonoidalGroupoid(M.homs, M.comp, 0, M.tensor_obj, M.tensor_mor, M.assoc, lunit, M.runit)
    with pytest.raises(UnitsNotIdentity):
        groupoid_to_quadruple(shifted)
    S3 = symmetric_group(3)
    with pytest.raises(EndomorphismsNotAbelian):
        groupoid_to_quadruple(_one_object(S3, S3.table))


def test_corrupt_tables():
    M, _ = groupoid_from_quadruple(quadruple(3, 1))
    comp = M.comp.copy()
    comp[0, 1] = 2
    with pytest.raises(CategoryLawFailed):
        validate_monoidal_groupoid(MonoidalGroupoid(
            M.homs, comp, 0, M.tensor_obj, M.tensor_mor, M.assoc, M.lunit, M.runit))
    tm = M.tensor_mor.copy()
    tm[1, 1] = 0
    with pytest.raises((FunctorialityFailed, NaturalityFailed)):
        validate_monoidal_groupoid(MonoidalGroupoid(
            M.homs, M.comp, 0, M.tensor_obj, tm, M.assoc, M.lunit, M.runit))
    # nontrivial left unitors with identity right unitors break the triangle
    lunit = M.lunit + 1
    err = first_failure(MonoidalGroupoid(
        M.homs, M.comp, 0, M.tensor_obj, M.tensor_mor, M.assoc, lunit, M.runit))
    assert isinstance(err, (TriangleFailed, NaturalityFailed))
    with pytest.raises(CategoryLawFailed):
        MonoidalGroupoid(M.homs, M.comp, 5, M.tensor_obj, M.tensor_mor, M.assoc, M.lunit, M.runit)


def test_noncommuting_unit_endomorphisms():
    S3 = symmetric_group(3)
    M = _one_object(S3, S3.table)
    assert not eckmann_hilton_check(M)
    with pytest.raises((FunctorialityFailed, NaturalityFailed)):
        validate_monoidal_groupoid(M)


def test_size_cap():
    M, _ = groupoid_from_quadruple(quadruple(3))
    with pytest.raises(BoundExceeded):
        first_failure(inflate(M, copies=3), max_morphisms=20)


# ---------------------------------------------------------------------------
# weak inverses


def test_discrete_monoid_is_not_a_2group():
    M = validate_monoidal_groupoid(_discrete_monoid())
    assert not is_weak_2group(M)
    assert find_weak_inverse(M, 1) is None
    assert find_weak_inverse(M, 0) == (0, 0, 0)
    with pytest.raises(NotWeak2Group):
        improve(M, InverseChoice(((0, 0, 0), (1, 1, 1))))


def test_ill_typed_choice():
    M, choice = groupoid_from_quadruple(quadruple(3, 1))
    bad = InverseChoice(((0, 0, 0), (1, 0, 0), (1, 0, 0)))
    with pytest.raises(IllTypedChoice):
        check_zigzags(M, bad, 1)
    with pytest.raises(IllTypedChoice):
        improve(M, InverseChoice(choice.entries[:2]))
    with pytest.raises(IllTypedChoice):
        InverseChoice.from_json({"entries": [{"x": 1, "xbar": 0, "i_mor": 0, "e_mor": 0}]})


# ---------------------------------------------------------------------------
# improvement


def test_coherent_builder_choice_is_fixed():
    for q in (quadruple(2, 1), quadruple(3, 1), quadruple(3, 2)):
        M, choice = groupoid_from_quadruple(q)
        assert improve(M, choice) == choice


def _formula_cases():
    M33 = Module.trivial(Z3, FinAbGroup((3,)))
    cases = [(M33, a) for a in closed_cochains(M33, 3)[::4]]
    cases += [(_neg_module(), a) for a in closed_cochains(_neg_module(), 3)]
    return cases


@pytest.mark.parametrize("mod,a", _formula_cases())
def test_iprime_coordinate_formula(mod, a):
    """i'_x = -a(x, xbar, x) - alpha(x) v(x), whatever u is."""
    G, H = mod.group, mod.coeffs
    M = skeletal_groupoid(G, H, mod.action, a)
    n, k = G.order, H.order
    inv = G.inverses
    for u, v in product(product(range(k), repeat=n), repeat=2):
        choice = builder_choice(G, H, a, u=u, v=v)
        for x in range(n):
            want = (-a(x, inv[x], x)[0] - mod.action(x, v[x])) % k
            assert iprime(M, choice, x) == want


def test_scrambled_choices_fail_both_zigzags():
    q = quadruple(3, 1)
    M, _ = groupoid_from_quadruple(q)
    inv = q.G.inverses
    for v in product(range(3), repeat=3):
        choice = builder_choice(q.G, q.H, q.a, u=[0, 0, 0], v=v)
        for x in range(3):
            coherent = v[x] == q.a(inv[x], x, inv[x])[0]
            assert check_zigzags(M, choice, x) == (coherent, coherent)


@pytest.mark.parametrize("q", [quadruple(2), quadruple(2, 1), quadruple(3, 2)],
                         ids=["z2-0", "z2-1", "z3-2"])
def test_improve_exhaustive_builder(q):
    M, _ = groupoid_from_quadruple(q)
    n, k = q.G.order, q.H.order
    for u, v in product(product(range(k), repeat=n), repeat=2):
        _sweep_choice(M, builder_choice(q.G, q.H, q.a, u=u, v=v))


@pytest.mark.parametrize("M", _non_skeletal(), ids=lambda M: f"{M.n_objects}obj-{M.n_morphisms}mor")
def test_non_skeletal_models(M):
    validate_monoidal_groupoid(M)
    assert is_weak_2group(M) and eckmann_hilton_check(M)
    rng = np.random.default_rng(M.n_morphisms)
    for _ in range(15):
        _sweep_choice(M, _random_choice(M, rng))
    for x in range(M.n_objects):
        y, i, e = find_weak_inverse(M, x)
        assert M.src[i] == M.unit and M.tgt[i] == M.obj_tensor(x, y)
        assert M.src[e] == M.obj_tensor(y, x) and M.tgt[e] == M.unit


def test_strict_quadruple_model():
    q = strict_quadruple(Z3, FinAbGroup((3,)))
    M, choice = groupoid_from_quadruple(q)
    for x, y, z in product(range(3), repeat=3):
        assert M.a(x, y, z) == M.id(M.obj_tensor(M.obj_tensor(x, y), z))
    assert all(i == 0 and e == 0 for _, i, e in choice)
