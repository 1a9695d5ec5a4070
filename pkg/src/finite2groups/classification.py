"""Homomorphisms, 2-homomorphisms and equivalence of skeletal 2-groups in
terms of their quadruples (G, H, alpha, a).

A special homomorphism (phi, psi, k) satisfies dk = psi a - a' phi^3 with k
valued in H' viewed as a G-module through alpha' o phi; a 2-homomorphism p
between (phi, psi, k) and (phi, psi, k') satisfies dp = k - k'.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .cohomology import (
    Module,
    NormalizedCochain,
    classes_equal,
    closed_cochains,
    cocycle_count,
    cohomology_group,
    differential,
    is_coboundary,
    zero_cochain,
)
from .errors import BoundExceeded, CoherenceFailed, EndpointMismatch, MismatchedModule, NotModuleMap
from .finite_algebra import GroupHom, enumerate_homs as group_homs, isomorphisms, validate_hom
from .monoidal_groupoid import (
    MonoidalFunctor,
    groupoid_from_quadruple,
    h2_holds,
    solve_F_minus1,
)
from .twogroups import Quadruple, strict_quadruple

DEFAULT_MAX_ENUMERATE = 100000


# ---------------------------------------------------------------------------
# coefficient maps


def additive_maps(H, H2):
    """Every homomorphism H -> H2 of finite abelian groups, as flat index maps.

    Generator images are restricted to elements killed by the generator's
    order; the result is sorted lexicographically.
    """
    choices = []
    for d in H.invariant_factors:
        choices.append([y for y in range(H2.order)
                        if not (d * H2.elements[y] % H2.moduli).any()])
    out = []
    E = H.elements
    for images in product(*choices):
        Y = H2.elements[list(images)] if images else np.zeros((0, H2.rank), dtype=np.int64)
        vals = (E @ Y) % H2.moduli if H.rank else np.zeros((1, H2.rank), dtype=np.int64)
        out.append(tuple(int(v) for v in (vals * H2.strides).sum(axis=-1)))
    return sorted(set(out))


def is_module_map(psi, phi, M, M2):
    """psi(alpha(g) h) = alpha'(phi g) psi(h) for all g, h."""
    a, a2 = M.action.arr, M2.action.arr
    lhs = np.asarray(psi)[a]
    rhs = a2[np.asarray(phi)][:, np.asarray(psi)]
    bad = np.argwhere(lhs != rhs)
    return None if not len(bad) else [int(v) for v in bad[0]]


def apply_psi(psi, f, module):
    """The cochain psi o f, living in ``module``."""
    H, H2 = f.module.coeffs, module.coeffs
    flat = (f.values * H.strides).sum(axis=-1)
    return NormalizedCochain(module, f.degree, H2.elements[np.asarray(psi)[flat]])


def pull_phi(f, phi, module):
    """The cochain f o phi^n, living in ``module``."""
    idx = np.ix_(*(np.asarray(phi),) * f.degree)
    return NormalizedCochain(module, f.degree, f.values[idx])


def hom_module(q, q2, phi):
    """H' as a G-module through alpha' o phi."""
    phi = phi if isinstance(phi, GroupHom) else GroupHom(q.G, q2.G, tuple(phi))
    return Module(q.G, q2.H, q2.alpha.pullback(phi))


def psi_from_images(H, H2, images):
    """Extend generator images (H2 tuples) additively to a flat index map."""
    images = [tuple(y) for y in images]
    if len(images) != H.rank:
        raise NotModuleMap(f"need {H.rank} generator images, got {len(images)}")
    for d, y in zip(H.invariant_factors, images):
        if any(d * c % m for c, m in zip(y, H2.invariant_factors)):
            raise NotModuleMap(f"image {list(y)} is not killed by {d}")
    out = []
    for idx in range(H.order):
        acc = np.zeros(H2.rank, dtype=np.int64)
        for c, y in zip(H.decode(idx), images):
            acc = acc + c * np.array(y, dtype=np.int64)
        out.append(H2.encode(acc % H2.moduli))
    return tuple(out)


# ---------------------------------------------------------------------------
# special homomorphisms


@dataclass(frozen=True, eq=False)
class SpecialHom:
    source: Quadruple
    target: Quadruple
    phi: GroupHom
    psi: tuple
    k: NormalizedCochain

    @cached_property
    def module(self):
        return hom_module(self.source, self.target, self.phi)

    def key(self):
        return (self.phi.map, self.psi, tuple(map(tuple, self.k.to_flat())))

    def __eq__(self, other):
        if not isinstance(other, SpecialHom):
            return NotImplemented
        return (self.key() == other.key() and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(self.key())

    def psi_images(self):
        H, H2 = self.source.H, self.target.H
        return [list(H2.decode(self.psi[H.encode(H.generator(i))])) for i in range(H.rank)]

    def to_json(self, endpoints=True):
        out = {"kind": "special_hom", "phi": list(self.phi.map), "psi": self.psi_images(),
               "k": self.k.to_json()}
        if endpoints:
            out["source"] = self.source.to_json()
            out["target"] = self.target.to_json()
        return out


def hom_obstruction(q, q2, phi, psi):
    """psi a - a' phi^3, the cochain dk must equal."""
    M = hom_module(q, q2, phi)
    return apply_psi(psi, q.a, M) - pull_phi(q2.a, phi.map if isinstance(phi, GroupHom) else phi, M)


def validate_special_hom(q, q2, phi, psi, k):
    phi = phi if isinstance(phi, GroupHom) else validate_hom(q.G, q2.G, phi)
    psi = tuple(int(v) for v in psi)
    if len(psi) != q.H.order or not all(0 <= v < q2.H.order for v in psi):
        raise NotModuleMap("psi must map every element of H into H'")
    # additivity
    A, A2 = q.H.as_group, q2.H.as_group
    for x, y in product(range(A.order), repeat=2):
        if psi[A.mul(x, y)] != A2.mul(psi[x], psi[y]):
            raise NotModuleMap("psi is not additive", witness=[x, y])
    w = is_module_map(psi, phi.map, q.module, q2.module)
    if w is not None:
        raise NotModuleMap("psi does not intertwine the actions", witness=w)
    M = hom_module(q, q2, phi)
    if k.module != M or k.degree != 2:
        raise MismatchedModule("k must be a 2-cochain on G valued in H' through alpha' o phi")
    if differential(k) != hom_obstruction(q, q2, phi, psi):
        raise CoherenceFailed("dk != psi a - a' phi^3")
    return SpecialHom(q, q2, phi, psi, k)


def _module_pairs(q, q2):
    maps = additive_maps(q.H, q2.H)
    for phi in group_homs(q.G, q2.G):
        for psi in maps:
            if is_module_map(psi, phi.map, q.module, q2.module) is None:
                yield phi, psi


def count_homs(q, q2):
    """Number of special homomorphisms, without listing them."""
    total = 0
    for phi, psi in _module_pairs(q, q2):
        if is_coboundary(hom_obstruction(q, q2, phi, psi)) is not None:
            total += cocycle_count(hom_module(q, q2, phi), 2)
    return total


def enumerate_homs(q, q2, max_enumerate=DEFAULT_MAX_ENUMERATE):
    """All special homomorphisms q -> q2 in (phi, psi, k) lexicographic order."""
    out = []
    for phi, psi in _module_pairs(q, q2):
        M = hom_module(q, q2, phi)
        w = is_coboundary(hom_obstruction(q, q2, phi, psi))
        if w is None:
            continue
        if len(out) + cocycle_count(M, 2) > max_enumerate:
            raise BoundExceeded(f"more than {max_enumerate} homomorphisms")
        ks = sorted((w + z for z in closed_cochains(M, 2)), key=lambda c: c.to_flat())
        out.extend(SpecialHom(q, q2, phi, psi, k) for k in ks)
    return out


def identity_hom(q):
    return SpecialHom(q, q, GroupHom(q.G, q.G, tuple(range(q.G.order))),
                      tuple(range(q.H.order)), zero_cochain(q.module, 2))


def compose_homs(F, F2):
    """F then F2: (phi2 phi, psi2 psi, psi2 k + k2 phi^2)."""
    if F.target != F2.source:
        raise EndpointMismatch("target of the first hom is not the source of the second")
    phi = F.phi.then(F2.phi)
    psi = tuple(F2.psi[v] for v in F.psi)
    M = hom_module(F.source, F2.target, phi)
    k = apply_psi(F2.psi, F.k, M) + pull_phi(F2.k, F.phi.map, M)
    return SpecialHom(F.source, F2.target, phi, psi, k)


# ---------------------------------------------------------------------------
# 2-homomorphisms


@dataclass(frozen=True, eq=False)
class TwoHom:
    source: SpecialHom
    target: SpecialHom
    p: NormalizedCochain

    def __eq__(self, other):
        if not isinstance(other, TwoHom):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def to_json(self, endpoints=True):
        out = {"kind": "two_hom", "p": self.p.to_json()}
        if endpoints:
            out["source"] = self.source.to_json()
            out["target"] = self.target.to_json()
        return out


def _check_endpoints(F, F2):
    if F.source != F2.source or F.target != F2.target:
        raise EndpointMismatch("homomorphisms do not share source and target")


def validate_two_hom(F, F2, p):
    _check_endpoints(F, F2)
    if F.phi != F2.phi or F.psi != F2.psi:
        raise CoherenceFailed("2-homomorphisms only join homs with equal phi and psi")
    if p.module != F2.module or p.degree != 1:
        raise MismatchedModule("p must be a 1-cochain valued in H' through alpha' o phi")
    if differential(p) != F.k - F2.k:
        raise CoherenceFailed("dp != k - k'")
    return TwoHom(F, F2, p)


def enumerate_2homs(F, F2, max_enumerate=DEFAULT_MAX_ENUMERATE):
    """All p with dp = k - k'; empty unless phi and psi agree (naturality forces it)."""
    _check_endpoints(F, F2)
    if F.phi != F2.phi or F.psi != F2.psi:
        return []
    w = is_coboundary(F.k - F2.k)
    if w is None:
        return []
    M = F2.module
    if cocycle_count(M, 1) > max_enumerate:
        raise BoundExceeded(f"more than {max_enumerate} 2-homomorphisms")
    ps = sorted((w + z for z in closed_cochains(M, 1)), key=lambda c: c.to_flat())
    return [TwoHom(F, F2, p) for p in ps]


def vertical_compose(t, t2):
    if t.target != t2.source:
        raise EndpointMismatch("2-homomorphisms are not composable")
    return TwoHom(t.source, t2.target, t.p + t2.p)


# ---------------------------------------------------------------------------
# groupoid models


def functor_from_hom(F, source_model=None, target_model=None):
    """The weak monoidal functor between builder groupoids that F describes."""
    Ms = source_model or groupoid_from_quadruple(F.source)[0]
    Mt = target_model or groupoid_from_quadruple(F.target)[0]
    k, k2 = F.source.H.order, F.target.H.order
    phi = np.asarray(F.phi.map)
    f = np.arange(Ms.n_morphisms)
    mor = phi[f // k] * k2 + np.asarray(F.psi)[f % k]
    kf = (F.k.values * F.target.H.strides).sum(axis=-1)
    F2 = phi[F.source.G.arr] * k2 + kf
    return MonoidalFunctor(Ms, Mt, phi, mor, F2, 0)


def transformation_from_two_hom(t):
    k2 = t.source.target.H.order
    pf = (t.p.values * t.source.target.H.strides).sum(axis=-1)
    return np.asarray(t.source.phi.map) * k2 + pf


def derive_F_minus1(F):
    """Per object x, the H'-coordinate of the unique F_-1 satisfying H1,
    found by search through the groupoid models."""
    Ms, cs = groupoid_from_quadruple(F.source)
    Mt, ct = groupoid_from_quadruple(F.target)
    Fm = functor_from_hom(F, Ms, Mt)
    k2 = F.target.H.order
    out = []
    for x in range(Ms.n_objects):
        sols = solve_F_minus1(Fm, cs, ct, x)
        if len(sols) != 1:
            raise CoherenceFailed(f"{len(sols)} solutions of H1 at {x}", witness=[x])
        out.append(F.target.H.decode(sols[0] % k2))
    return out


def F_minus1_satisfies_h2(F, table):
    Ms, cs = groupoid_from_quadruple(F.source)
    Mt, ct = groupoid_from_quadruple(F.target)
    Fm = functor_from_hom(F, Ms, Mt)
    k2 = F.target.H.order
    G = F.source.G
    for x in range(G.order):
        m = F.phi(G.inv(x)) * k2 + F.target.H.encode(table[x])
        if not h2_holds(Fm, cs, ct, x, m):
            return False
    return True


# ---------------------------------------------------------------------------
# strictification and classification


def strictify_if_coboundary(q):
    """(q', F) with q' strict and F = (id, id, w) when a = dw, else None."""
    w = is_coboundary(q.a)
    if w is None:
        return None
    q2 = strict_quadruple(q.G, q.H, q.alpha)
    ident = GroupHom(q.G, q.G, tuple(range(q.G.order)))
    return q2, SpecialHom(q, q2, ident, tuple(range(q.H.order)), w)


def transport(a, phi, psi, module):
    """psi o a o (phi^-1)^n, for isomorphisms phi, psi."""
    inv = np.argsort(np.asarray(phi))
    return apply_psi(psi, pull_phi(a, inv, a.module), module)


def equivalent(q, q2):
    """Isomorphisms (phi, psi) carrying alpha to alpha' and [a] to [a'], or None."""
    if q.G.order != q2.G.order or q.H.order != q2.H.order:
        return None
    psis = isomorphisms(q.H.as_group, q2.H.as_group)
    for phi in isomorphisms(q.G, q2.G):
        for psi in psis:
            if is_module_map(psi, phi, q.module, q2.module) is not None:
                continue
            if classes_equal(transport(q.a, phi, psi, q2.module), q2.a):
                return tuple(phi), tuple(psi)
    return None


def equivalence_orbits(G, H, alpha):
    """Orbits of H^3(G, H) class coordinates under compatible automorphism pairs."""
    M = Module(G, H, alpha)
    Hc = cohomology_group(M, 3)
    pairs = [(phi, psi) for phi in isomorphisms(G, G)
             for psi in isomorphisms(H.as_group, H.as_group)
             if is_module_map(psi, phi, M, M) is None]
    elements = Hc.elements()
    cocycles = {c: Hc.cocycle(c) for c in elements}
    seen, orbits = set(), []
    for c in elements:
        if c in seen:
            continue
        orbit, frontier = {c}, [c]
        while frontier:
            nxt = []
            for x in frontier:
                for phi, psi in pairs:
                    y = Hc.project(transport(cocycles[x], phi, psi, M))
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def count_equivalence_classes(G, H, alpha):
    return len(equivalence_orbits(G, H, alpha))
