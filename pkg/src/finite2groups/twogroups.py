"""Crossed modules, strict 2-groups and the quadruple data (G, H, alpha, a)
of skeletal 2-groups, plus the finite example builders.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .cohomology import Module, NormalizedCochain, is_cocycle, zero_cochain
from .errors import (
    EquivarianceFailed,
    KernelNotCentral,
    MismatchedModule,
    NotAbelian,
    NotCocycle,
    NotSurjective,
    PeifferFailed,
    StrictLawFailed,
)
from .finite_algebra import (
    DEFAULT_MAX_ORDER,
    FinAbGroup,
    FiniteGroup,
    GAction,
    GroupHom,
    automorphism_group,
    conjugation_action,
    isomorphisms,
    subgroup,
    trivial_action,
    validate_action,
    validate_group,
    validate_hom,
)


def _as_group(H):
    return H.as_group if isinstance(H, FinAbGroup) else H


# ---------------------------------------------------------------------------
# crossed modules


@dataclass(frozen=True)
class CrossedModule:
    """(G, H, t, alpha): t: H -> G equivariant, with the Peiffer identity."""

    G: FiniteGroup
    H: FiniteGroup
    t: GroupHom
    alpha: GAction

    def to_json(self):
        return {"kind": "crossed_module", "G": self.G.to_json(), "H": self.H.to_json(),
                "t": list(self.t.map), "alpha": self.alpha.to_json()}


def validate_crossed_module(G, H, t, alpha):
    """Check the crossed module identities, reporting a witness on failure.

    ``t`` may be a GroupHom or a plain index map; ``alpha`` a GAction or a
    list of permutations.
    """
    H = _as_group(H)
    tmap = t.map if isinstance(t, GroupHom) else t
    t = validate_hom(H, G, tmap)
    perms = alpha.perms if isinstance(alpha, GAction) else alpha
    alpha = validate_action(G, H, perms)
    for g, h in product(range(G.order), range(H.order)):
        if t(alpha(g, h)) != G.conj(g, t(h)):
            raise EquivarianceFailed(f"t(alpha({g},{h})) != {g} t({h}) {g}^-1", witness=[g, h])
    for h, h2 in product(range(H.order), repeat=2):
        if alpha(t(h), h2) != H.conj(h, h2):
            raise PeifferFailed(f"alpha(t({h}),{h2}) != {h} {h2} {h}^-1", witness=[h, h2])
    return CrossedModule(G, H, t, alpha)


def crossed_modules_isomorphic(cm, cm2):
    """A pair (phi_G, phi_H) of isomorphisms intertwining t and alpha, or None."""
    for fG in isomorphisms(cm.G, cm2.G):
        for fH in isomorphisms(cm.H, cm2.H):
            if any(cm2.t(fH[h]) != fG[cm.t(h)] for h in range(cm.H.order)):
                continue
            if all(fH[cm.alpha(g, h)] == cm2.alpha(fG[g], fH[h])
                   for g in range(cm.G.order) for h in range(cm.H.order)):
                return fG, fH
    return None


# ---------------------------------------------------------------------------
# strict 2-groups


@dataclass(frozen=True)
class StrictTwoGroup:
    """A category in Grp: object group C0, morphism group C1.

    ``comp[f][g]`` is the composite "f then g" when t(f) = s(g), else -1.
    """

    C0: FiniteGroup
    C1: FiniteGroup
    s: GroupHom
    t: GroupHom
    i: GroupHom
    comp: tuple

    @property
    def is_skeletal(self):
        return self.s.map == self.t.map

    def to_json(self, with_comp=True):
        out = {"kind": "strict_two_group", "C0": self.C0.to_json(), "C1": self.C1.to_json(),
               "s": list(self.s.map), "t": list(self.t.map), "i": list(self.i.map)}
        if with_comp:
            out["comp"] = [[f, g, c] for f, row in enumerate(self.comp)
                           for g, c in enumerate(row) if c >= 0]
        return out


def _default_comp(C1, s, t, i):
    """f then g = f . i(t f)^-1 . g, the composition forced in a category in Grp."""
    n = C1.order
    rows = []
    for f in range(n):
        row = []
        u = C1.inv(i(t(f)))
        for g in range(n):
            row.append(C1.mul(C1.mul(f, u), g) if t(f) == s(g) else -1)
        rows.append(tuple(row))
    return tuple(rows)


def validate_strict_two_group(C0, C1, s, t, i, comp=None):
    """Check the category-in-Grp laws; ``comp`` defaults to the forced one.

    ``comp`` may be a full table or a sparse list of ``[f, g, fg]`` triples.
    """
    s = validate_hom(C1, C0, s.map if isinstance(s, GroupHom) else s)
    t = validate_hom(C1, C0, t.map if isinstance(t, GroupHom) else t)
    i = validate_hom(C0, C1, i.map if isinstance(i, GroupHom) else i)
    n = C1.order
    if comp is None:
        comp = _default_comp(C1, s, t, i)
    elif comp and len(comp[0]) == 3 and len(comp) != n:
        table = [[-1] * n for _ in range(n)]
        for f, g, c in comp:
            table[f][g] = c
        comp = tuple(tuple(r) for r in table)
    else:
        comp = tuple(tuple(int(v) for v in r) for r in comp)
    for x in range(C0.order):
        if s(i(x)) != x or t(i(x)) != x:
            raise StrictLawFailed(f"identity on {x} has wrong source or target", witness=[x])
    pairs = [(f, g) for f in range(n) for g in range(n) if t(f) == s(g)]
    for f, g in pairs:
        c = comp[f][g]
        if not 0 <= c < n:
            raise StrictLawFailed(f"composite of {f},{g} undefined", witness=[f, g])
        if s(c) != s(f) or t(c) != t(g):
            raise StrictLawFailed(f"composite of {f},{g} has wrong ends", witness=[f, g])
    for f in range(n):
        if comp[i(s(f))][f] != f or comp[f][i(t(f))] != f:
            raise StrictLawFailed(f"identity law fails at {f}", witness=[f])
    for f, g in pairs:
        for h in range(n):
            if t(g) == s(h) and comp[comp[f][g]][h] != comp[f][comp[g][h]]:
                raise StrictLawFailed("composition not associative", witness=[f, g, h])
    # interchange: composition is a homomorphism on composable pairs
    for (f, g), (f2, g2) in product(pairs, repeat=2):
        lhs = comp[C1.mul(f, f2)][C1.mul(g, g2)]
        rhs = C1.mul(comp[f][g], comp[f2][g2])
        if lhs != rhs:
            raise StrictLawFailed("interchange law fails", witness=[f, g, f2, g2])
    return StrictTwoGroup(C0, C1, s, t, i, comp)


def crossed_to_strict(cm):
    """The strict 2-group with C1 = H x| G, (h,g) stored at h + |H| g.

    (h,g)(h',g') = (h alpha(g,h'), g g'), s(h,g) = g, t(h,g) = t(h) g,
    i(g) = (1,g); (h1, g) then (h2, t(h1) g) composes to (h2 h1, g).
    """
    G, H, a = cm.G, cm.H, cm.alpha
    nH, nG = H.order, G.order
    n = nH * nG

    def split(x):
        return x % nH, x // nH

    rows = []
    for x in range(n):
        h, g = split(x)
        row = []
        for y in range(n):
            h2, g2 = split(y)
            row.append(H.mul(h, a(g, h2)) + nH * G.mul(g, g2))
        rows.append(tuple(row))
    C1 = validate_group(rows)
    s = [split(x)[1] for x in range(n)]
    t = [G.mul(cm.t(split(x)[0]), split(x)[1]) for x in range(n)]
    i = [nH * g for g in range(nG)]
    comp = []
    for x in range(n):
        h1, g = split(x)
        row = []
        for y in range(n):
            h2, g2 = split(y)
            row.append(H.mul(h2, h1) + nH * g if t[x] == g2 else -1)
        comp.append(tuple(row))
    return validate_strict_two_group(G, C1, s, t, i, tuple(comp))


def strict_to_crossed(st):
    """G = C0, H = ker s, t restricted, alpha(g, h) = i(g) h i(g)^-1."""
    C1 = st.C1
    H, embed = subgroup(C1, st.s.kernel)
    pos = {x: j for j, x in enumerate(embed)}
    t = [st.t(x) for x in embed]
    perms = []
    for g in range(st.C0.order):
        ig = st.i(g)
        perms.append([pos[C1.conj(ig, x)] for x in embed])
    return validate_crossed_module(st.C0, H, t, perms)


# ---------------------------------------------------------------------------
# example builders


def aut2group(H, max_order=DEFAULT_MAX_ORDER):
    """(Aut(H), H, inner, tautological action)."""
    H = _as_group(H)
    A, taut = automorphism_group(H, max_order)
    index = {p: j for j, p in enumerate(taut.perms)}
    t = [index[tuple(H.conj(h, x) for x in range(H.order))] for h in range(H.order)]
    return validate_crossed_module(A, H, t, taut)


def central_extension_crossed(p):
    """Crossed module (G, H, p, conjugation by lifts) for a central extension.

    ``p`` is a surjective GroupHom H -> G whose kernel must be central.
    """
    H, G = p.source, p.target
    if not p.is_surjective:
        missing = min(set(range(G.order)) - set(p.map))
        raise NotSurjective(f"{missing} is not in the image", witness=[missing])
    for z in p.kernel:
        for h in range(H.order):
            if H.mul(z, h) != H.mul(h, z):
                raise KernelNotCentral(f"kernel element {z} does not commute with {h}",
                                       witness=[z, h])
    lifts = [min(h for h in range(H.order) if p(h) == g) for g in range(G.order)]
    perms = []
    for g in range(G.order):
        perm = [H.conj(lifts[g], h) for h in range(H.order)]
        for other in range(H.order):
            if p(other) == g and any(H.conj(other, h) != perm[h] for h in range(H.order)):
                raise KernelNotCentral("conjugation depends on the lift", witness=[g, other])
        perms.append(perm)
    return validate_crossed_module(G, H, p, perms)


def trivial_t_crossed(G, H, alpha):
    """(G, H, trivial t, alpha) for abelian H."""
    Hg = _as_group(H)
    if not Hg.is_abelian:
        for a, b in product(range(Hg.order), repeat=2):
            if Hg.mul(a, b) != Hg.mul(b, a):
                raise NotAbelian(f"{a} and {b} do not commute", witness=[a, b])
    perms = alpha.perms if isinstance(alpha, GAction) else alpha
    return validate_crossed_module(G, Hg, [0] * Hg.order, perms)


def identity_crossed(G):
    """(G, G, id, conjugation); also the identity central extension."""
    return validate_crossed_module(G, G, list(range(G.order)), conjugation_action(G))


# ---------------------------------------------------------------------------
# quadruples


@dataclass(frozen=True)
class Quadruple:
    """(G, H, alpha, a) with a a normalized 3-cocycle."""

    G: FiniteGroup
    H: FinAbGroup
    alpha: GAction
    a: NormalizedCochain

    @cached_property
    def module(self):
        return Module(self.G, self.H, self.alpha)

    def to_json(self):
        return {"kind": "two_group", "group": self.G.to_json(), "coeffs": self.H.to_json(),
                "alpha": self.alpha.to_json(), "a": self.a.to_json()}


def validate_quadruple(G, H, alpha, a):
    alpha = validate_action(G, H, alpha.perms if isinstance(alpha, GAction) else alpha)
    M = Module(G, H, alpha)
    if a.module != M or a.degree != 3:
        raise MismatchedModule("associator cochain does not live on (G, H, alpha) in degree 3")
    if not is_cocycle(a):
        raise NotCocycle("associator is not a 3-cocycle")
    return Quadruple(G, H, alpha, a)


def strict_quadruple(G, H, alpha=None):
    alpha = alpha or trivial_action(G, H)
    return Quadruple(G, H, alpha, zero_cochain(Module(G, H, alpha), 3))
