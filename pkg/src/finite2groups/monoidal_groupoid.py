"""Weak monoidal groupoids given by explicit tables.

Morphisms are numbered globally, grouped by (source, target) in row-major
order. Composition is written diagrammatically: ``comp[f, g]`` is "f then g"
and is -1 when ``tgt(f) != src(g)``. Every law check returns either ``None``
or the exception describing the first violation found, so callers can
decide whether to raise.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .errors import (
    AlgebraError,
    BoundExceeded,
    CategoryLawFailed,
    CoherenceFailed,
    EndomorphismsNotAbelian,
    FunctorialityFailed,
    IllTypedChoice,
    NaturalityFailed,
    NotInvertible,
    NotNormalized,
    NotSkeletal,
    NotWeak2Group,
    PentagonFailed,
    TriangleFailed,
    UnitsNotIdentity,
)
from .cohomology import Module, NormalizedCochain
from .finite_algebra import FiniteGroup, abelian_structure, validate_action, validate_group

DEFAULT_MAX_MORPHISMS = 64
_CHUNK = 1 << 22


def _ro(a):
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def _first(mask):
    idx = np.argwhere(mask)
    return None if not len(idx) else [int(v) for v in idx[0]]


class MonoidalGroupoid:
    """Tables of a monoidal category whose morphisms are all invertible.

    ``assoc[x, y, z]`` is a_{x,y,z}: (x y) z -> x (y z); ``lunit[x]`` is
    1 x -> x and ``runit[x]`` is x 1 -> x. Construct through
    :func:`validate_monoidal_groupoid` unless the tables are known good.
    """

    def __init__(self, homs, comp, unit, tensor_obj, tensor_mor, assoc, lunit, runit):
        self.homs = _ro(homs)
        n = self.n_objects = self.homs.shape[0]
        if self.homs.shape != (n, n) or (self.homs < 0).any():
            raise CategoryLawFailed("hom counts must be a square table of non-negative integers")
        counts = self.homs.reshape(-1)
        self.offsets = _ro(np.concatenate([[0], np.cumsum(counts)]))
        m = self.n_morphisms = int(self.offsets[-1])
        pairs = np.repeat(np.arange(n * n), counts)
        self.src = _ro(pairs // n)
        self.tgt = _ro(pairs % n)
        self.unit = int(unit)
        self.comp = _ro(np.reshape(comp, (m, m)))
        self.tensor_obj = _ro(np.reshape(tensor_obj, (n, n)))
        self.tensor_mor = _ro(np.reshape(tensor_mor, (m, m)))
        self.assoc = _ro(np.reshape(assoc, (n, n, n)))
        self.lunit = _ro(np.reshape(lunit, (n,)))
        self.runit = _ro(np.reshape(runit, (n,)))
        if not 0 <= self.unit < n:
            raise CategoryLawFailed(f"unit object {self.unit} out of range")
        for name, a, top in [("comp", self.comp, m), ("tensor_mor", self.tensor_mor, m),
                             ("tensor_obj", self.tensor_obj, n), ("assoc", self.assoc, m),
                             ("lunit", self.lunit, m), ("runit", self.runit, m)]:
            low = -1 if name == "comp" else 0
            if a.size and (a.min() < low or a.max() >= top):
                raise CategoryLawFailed(f"{name} has entries out of range")

    def __eq__(self, other):
        if not isinstance(other, MonoidalGroupoid):
            return NotImplemented
        names = ("homs", "comp", "tensor_obj", "tensor_mor", "assoc", "lunit", "runit")
        return self.unit == other.unit and all(
            np.array_equal(getattr(self, k), getattr(other, k)) for k in names)

    __hash__ = None

    def hom(self, x, y):
        start = int(self.offsets[x * self.n_objects + y])
        return range(start, start + int(self.homs[x, y]))

    @cached_property
    def identity(self):
        """``identity[x]``, or -1 where no two-sided unit exists."""
        out = np.full(self.n_objects, -1, dtype=np.int64)
        C = self.comp
        for x in range(self.n_objects):
            outgoing = np.nonzero(self.src == x)[0]
            incoming = np.nonzero(self.tgt == x)[0]
            for f in self.hom(x, x):
                if (C[f, outgoing] == outgoing).all() and (C[incoming, f] == incoming).all():
                    out[x] = f
                    break
        out.setflags(write=False)
        return out

    @cached_property
    def inverse(self):
        """``inverse[f]``, or -1 where f has no inverse."""
        C, idn = self.comp, self.identity
        ok = (C == idn[self.src][:, None]) & (C.T == idn[self.tgt][:, None])
        out = np.where(ok.any(axis=1), ok.argmax(axis=1), -1)
        out.setflags(write=False)
        return out

    def id(self, x):
        return int(self.identity[x])

    def inv(self, f):
        return int(self.inverse[f])

    def then(self, *fs):
        """The composite f1 then f2 then ..."""
        out = fs[0]
        for g in fs[1:]:
            c = int(self.comp[out, g])
            if c < 0:
                raise CategoryLawFailed(f"morphisms {out} and {g} are not composable",
                                        witness=[int(out), int(g)])
            out = c
        return int(out)

    def tensor(self, f, g):
        return int(self.tensor_mor[f, g])

    def obj_tensor(self, x, y):
        return int(self.tensor_obj[x, y])

    def a(self, x, y, z):
        return int(self.assoc[x, y, z])

    def to_json(self):
        n = self.n_objects
        # first index least significant in every flattened table
        return {
            "kind": "monoidal_groupoid",
            "objects": n,
            "unit": self.unit,
            "homs": self.homs.tolist(),
            "comp": self.comp.T.reshape(-1).tolist(),
            "tensor_obj": self.tensor_obj.tolist(),
            "tensor_mor": self.tensor_mor.T.reshape(-1).tolist(),
            "assoc": np.transpose(self.assoc, (2, 1, 0)).reshape(-1).tolist(),
            "lunit": self.lunit.tolist(),
            "runit": self.runit.tolist(),
        }

    @classmethod
    def from_json(cls, obj):
        n = int(obj["objects"])
        homs = obj["homs"]
        m = int(np.sum(homs))
        comp = np.reshape(obj["comp"], (m, m)).T
        tm = np.reshape(obj["tensor_mor"], (m, m)).T
        assoc = np.transpose(np.reshape(obj["assoc"], (n, n, n)), (2, 1, 0))
        return cls(homs, comp, obj.get("unit", 0), obj["tensor_obj"], tm, assoc,
                   obj["lunit"], obj["runit"])


# ---------------------------------------------------------------------------
# law checks


def _chunks(total, width):
    step = max(1, _CHUNK // max(width, 1))
    for lo in range(0, total, step):
        yield lo, min(total, lo + step)


def check_category(M):
    C, src, tgt = M.comp, M.src, M.tgt
    m = M.n_morphisms
    composable = tgt[:, None] == src[None, :]
    w = _first(composable & (C < 0))
    if w:
        return CategoryLawFailed(f"composite of {w[0]} and {w[1]} missing", witness=w)
    w = _first(~composable & (C >= 0))
    if w:
        return CategoryLawFailed(f"composite defined on non-composable {w[0]}, {w[1]}", witness=w)
    Cc = np.where(composable, C, 0)
    bad = composable & ((src[Cc] != src[:, None]) | (tgt[Cc] != tgt[None, :]))
    w = _first(bad)
    if w:
        return CategoryLawFailed(f"composite of {w[0]} and {w[1]} has wrong ends", witness=w)
    missing = np.nonzero(M.identity < 0)[0]
    if missing.size:
        x = int(missing[0])
        return CategoryLawFailed(f"object {x} has no identity", witness=[x])
    for lo, hi in _chunks(m, m * m):
        F = np.arange(lo, hi)[:, None, None]
        G = np.arange(m)[None, :, None]
        H = np.arange(m)[None, None, :]
        ok = composable[F, G] & composable[G, H]
        lhs = Cc[Cc[F, G], H]
        rhs = Cc[F, Cc[G, H]]
        w = _first(ok & (lhs != rhs))
        if w:
            w[0] += lo
            return CategoryLawFailed("composition is not associative", witness=w)
    return None


def check_inverses(M):
    bad = np.nonzero(M.inverse < 0)[0]
    if bad.size:
        return NotInvertible(f"morphism {int(bad[0])} has no inverse", witness=[int(bad[0])])
    return None


def _composable_pairs(M):
    f, g = np.nonzero(M.tgt[:, None] == M.src[None, :])
    return f, g, M.comp[f, g]


def check_functoriality(M):
    T, TM, src, tgt, idn, C = M.tensor_obj, M.tensor_mor, M.src, M.tgt, M.identity, M.comp
    bad = (src[TM] != T[src[:, None], src[None, :]]) | (tgt[TM] != T[tgt[:, None], tgt[None, :]])
    w = _first(bad)
    if w:
        return FunctorialityFailed(f"tensor of {w[0]} and {w[1]} has wrong ends", witness=w)
    n = M.n_objects
    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    w = _first(TM[idn[X], idn[Y]] != idn[T[X, Y]])
    if w:
        return FunctorialityFailed(f"tensor of identities on {w[0]}, {w[1]} is not an identity",
                                   witness=w)
    pf, pg, pc = _composable_pairs(M)
    P = len(pf)
    for lo, hi in _chunks(P, P):
        a = slice(lo, hi)
        lhs = C[TM[pf[a, None], pf[None, :]], TM[pg[a, None], pg[None, :]]]
        rhs = TM[pc[a, None], pc[None, :]]
        w = _first(lhs != rhs)
        if w:
            i, j = w[0] + lo, w[1]
            return FunctorialityFailed("interchange law fails",
                                       witness=[int(pf[i]), int(pg[i]), int(pf[j]), int(pg[j])])
    return None


def check_components(M):
    """Associator and unitors must have the right sources and targets."""
    T, A, L, R, u = M.tensor_obj, M.assoc, M.lunit, M.runit, M.unit
    n = M.n_objects
    X, Y, Z = np.meshgrid(*(np.arange(n),) * 3, indexing="ij")
    w = _first((M.src[A] != T[T[X, Y], Z]) | (M.tgt[A] != T[X, T[Y, Z]]))
    if w:
        return NaturalityFailed("associator component has the wrong type", witness=w)
    x = np.arange(n)
    w = _first((M.src[L] != T[u, x]) | (M.tgt[L] != x))
    if w:
        return NaturalityFailed("left unitor component has the wrong type", witness=w)
    w = _first((M.src[R] != T[x, u]) | (M.tgt[R] != x))
    if w:
        return NaturalityFailed("right unitor component has the wrong type", witness=w)
    return None


def check_naturality(M):
    C, TM, A, L, R = M.comp, M.tensor_mor, M.assoc, M.lunit, M.runit
    src, tgt, m = M.src, M.tgt, M.n_morphisms
    f = np.arange(m)
    one = M.identity[M.unit]
    w = _first(C[TM[one, f], L[tgt]] != C[L[src], f])
    if w:
        return NaturalityFailed(f"left unitor not natural at morphism {w[0]}", witness=w)
    w = _first(C[TM[f, one], R[tgt]] != C[R[src], f])
    if w:
        return NaturalityFailed(f"right unitor not natural at morphism {w[0]}", witness=w)
    for lo, hi in _chunks(m, m * m):
        F = np.arange(lo, hi)[:, None, None]
        G = f[None, :, None]
        H = f[None, None, :]
        lhs = C[TM[TM[F, G], H], A[tgt[F], tgt[G], tgt[H]]]
        rhs = C[A[src[F], src[G], src[H]], TM[F, TM[G, H]]]
        w = _first(lhs != rhs)
        if w:
            w[0] += lo
            return NaturalityFailed("associator not natural", witness=w)
    return None


def check_pentagon(M):
    C, TM, A, T, idn = M.comp, M.tensor_mor, M.assoc, M.tensor_obj, M.identity
    n = M.n_objects
    W, X, Y, Z = np.meshgrid(*(np.arange(n),) * 4, indexing="ij")
    lhs = C[C[TM[A[W, X, Y], idn[Z]], A[W, T[X, Y], Z]], TM[idn[W], A[X, Y, Z]]]
    rhs = C[A[T[W, X], Y, Z], A[W, X, T[Y, Z]]]
    w = _first(lhs != rhs)
    if w:
        return PentagonFailed(f"pentagon fails at objects {w}", witness=w)
    return None


def check_triangle(M):
    C, TM, A, idn, u = M.comp, M.tensor_mor, M.assoc, M.identity, M.unit
    n = M.n_objects
    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    lhs = C[A[X, u, Y], TM[idn[X], M.lunit[Y]]]
    rhs = TM[M.runit[X], idn[Y]]
    w = _first(lhs != rhs)
    if w:
        return TriangleFailed(f"triangle fails at objects {w}", witness=w)
    return None


STRUCTURE_CHECKS = (check_category, check_inverses, check_functoriality, check_components)
LAW_CHECKS = {"naturality": check_naturality, "pentagon": check_pentagon,
              "triangle": check_triangle}


def first_failure(M, laws=("naturality", "pentagon", "triangle"),
                  max_morphisms=DEFAULT_MAX_MORPHISMS):
    """Run the structural checks, then the named laws; the first failure or None."""
    if max_morphisms is not None and M.n_morphisms > max_morphisms:
        raise BoundExceeded(f"{M.n_morphisms} morphisms exceeds the cap {max_morphisms}")
    for check in STRUCTURE_CHECKS:
        err = check(M)
        if err is not None:
            return err
    for law in laws:
        err = LAW_CHECKS[law](M)
        if err is not None:
            return err
    return None


def validate_monoidal_groupoid(M, max_morphisms=DEFAULT_MAX_MORPHISMS):
    """Validate a :class:`MonoidalGroupoid` (or a JSON-style dict of tables)."""
    if isinstance(M, dict):
        M = MonoidalGroupoid.from_json(M)
    err = first_failure(M, max_morphisms=max_morphisms)
    if err is not None:
        raise err
    return M


# ---------------------------------------------------------------------------
# weak inverses and adjoint choices


@dataclass(frozen=True)
class InverseChoice:
    """Per object x: (xbar, i_x: 1 -> x xbar, e_x: xbar x -> 1)."""

    entries: tuple

    def __getitem__(self, x):
        return self.entries[x]

    def __len__(self):
        return len(self.entries)

    def to_json(self):
        return {"kind": "inverse_choice",
                "entries": [{"x": x, "xbar": int(b), "i_mor": int(i), "e_mor": int(e)}
                            for x, (b, i, e) in enumerate(self.entries)]}

    @classmethod
    def from_json(cls, obj):
        rows = sorted(obj["entries"], key=lambda r: r["x"])
        if [r["x"] for r in rows] != list(range(len(rows))):
            raise IllTypedChoice("choice entries must cover objects 0..n-1 exactly once")
        return cls(tuple((int(r["xbar"]), int(r["i_mor"]), int(r["e_mor"])) for r in rows))


def find_weak_inverse(M, x):
    """Smallest y with y x = 1 and x y = 1 up to isomorphism, with the
    smallest witnessing isomorphisms; None when x is not invertible."""
    u = M.unit
    for y in range(M.n_objects):
        back = M.hom(M.obj_tensor(y, x), u)
        if not len(back):
            continue
        fwd = M.hom(u, M.obj_tensor(x, y))
        if len(fwd):
            return y, fwd[0], back[0]
    return None


def is_weak_2group(M):
    cached = M.__dict__.get("_weak_2group")
    if cached is None:
        cached = check_inverses(M) is None and all(
            find_weak_inverse(M, x) is not None for x in range(M.n_objects))
        M.__dict__["_weak_2group"] = cached
    return cached


def _check_choice(M, choices, x):
    if len(choices) != M.n_objects:
        raise IllTypedChoice(f"need {M.n_objects} entries, got {len(choices)}")
    xbar, i, e = choices[x]
    m, u = M.n_morphisms, M.unit
    if not (0 <= xbar < M.n_objects and 0 <= i < m and 0 <= e < m):
        raise IllTypedChoice(f"choice at {x} out of range", witness=[x])
    if M.src[i] != u or M.tgt[i] != M.obj_tensor(x, xbar):
        raise IllTypedChoice(f"i_{x} is not a morphism 1 -> x xbar", witness=[x])
    if M.src[e] != M.obj_tensor(xbar, x) or M.tgt[e] != u:
        raise IllTypedChoice(f"e_{x} is not a morphism xbar x -> 1", witness=[x])
    if M.inverse[i] < 0 or M.inverse[e] < 0:
        raise IllTypedChoice(f"choice at {x} is not invertible", witness=[x])
    return xbar, i, e


def check_zigzags(M, choices, x):
    """Truth values of the two zig-zag identities at x."""
    xbar, i, e = _check_choice(M, choices, x)
    ix, ixb = M.id(x), M.id(xbar)
    first = M.then(M.tensor(i, ix), M.a(x, xbar, x), M.tensor(ix, e))
    second = M.then(M.tensor(ixb, i), M.inv(M.a(xbar, x, xbar)), M.tensor(e, ixb))
    return (first == M.then(M.lunit[x], M.inv(M.runit[x])),
            second == M.then(M.runit[xbar], M.inv(M.lunit[xbar])))


def _iprime_head(M, x, xbar, i, e):
    """The five steps shared by i'_x and its mirror, ending in (x xbar)(x xbar)."""
    ix, ixb = M.id(x), M.id(xbar)
    xxb = M.obj_tensor(x, xbar)
    return M.then(
        i,
        M.tensor(ix, M.inv(M.lunit[xbar])),
        M.tensor(ix, M.tensor(M.inv(e), ixb)),
        M.tensor(ix, M.a(xbar, x, xbar)),
        M.inv(M.a(x, xbar, xxb)),
    )


def iprime(M, choices, x):
    """The improved unit i'_x, evaluated through the tables."""
    xbar, i, e = _check_choice(M, choices, x)
    xxb = M.obj_tensor(x, xbar)
    return M.then(
        _iprime_head(M, x, xbar, i, e),
        M.tensor(M.inv(i), M.id(xxb)),
        M.inv(M.a(M.unit, x, xbar)),
        M.tensor(M.lunit[x], M.id(xbar)),
    )


def iprime_mirror(M, choices, x):
    """The same head, closed off with i^-1 on the right and the right unitor."""
    xbar, i, e = _check_choice(M, choices, x)
    xxb = M.obj_tensor(x, xbar)
    return M.then(
        _iprime_head(M, x, xbar, i, e),
        M.tensor(M.id(xxb), M.inv(i)),
        M.runit[xxb],
    )


def check_alt_iprime(M, choices, x):
    return iprime(M, choices, x) == iprime_mirror(M, choices, x)


def improve(M, choices):
    """Keep xbar and e_x, replace i_x by the composite making both zig-zags hold."""
    if not is_weak_2group(M):
        raise NotWeak2Group("some object has no weak inverse")
    for x in range(M.n_objects):
        _check_choice(M, choices, x)
    return InverseChoice(tuple((choices[x][0], iprime(M, choices, x), choices[x][2])
                               for x in range(M.n_objects)))


def eckmann_hilton_check(M):
    """End(1) is commutative and composition agrees with tensor there."""
    u = M.unit
    E = np.array(M.hom(u, u), dtype=np.int64)
    if not E.size:
        return False
    C, TM = M.comp, M.tensor_mor
    l1 = int(M.lunit[u])
    if not (M.src[l1] == u and M.tgt[l1] == u) or M.inverse[l1] < 0:
        return False
    comp = C[E[:, None], E[None, :]]
    if not np.array_equal(comp, comp.T):
        return False
    via_tensor = C[C[M.inverse[l1], TM[E[:, None], E[None, :]]], l1]
    return bool(np.array_equal(via_tensor, comp))


# ---------------------------------------------------------------------------
# skeletal builders


def skeletal_groupoid(G, H, alpha, a_values):
    """Skeletal monoidal groupoid on objects G with Aut(x) = H.

    Morphism (x, h) has index ``x |H| + h``; (x,h) (x,h') = (x, h+h'),
    (x,h) tensor (y,h') = (xy, h + alpha(x) h'), a_{x,y,z} = (xyz, a(x,y,z))
    and both unitors are identities. ``a_values`` is an integer array of
    shape (|G|,|G|,|G|) of flat H indices, or a degree-3 cochain; no cocycle
    condition is assumed here.
    """
    n, k = G.order, H.order
    if hasattr(a_values, "values"):
        a_values = (a_values.values * H.strides).sum(axis=-1)
    a_values = np.asarray(a_values, dtype=np.int64).reshape(n, n, n)
    add = H.as_group.arr
    act = alpha.arr
    Gt = G.arr
    m = n * k
    f = np.arange(m)
    fx, fh = f // k, f % k
    same = fx[:, None] == fx[None, :]
    comp = np.where(same, fx[:, None] * k + add[fh[:, None], fh[None, :]], -1)
    tm = Gt[fx[:, None], fx[None, :]] * k + add[fh[:, None], act[fx[:, None], fh[None, :]]]
    X, Y, Z = np.meshgrid(*(np.arange(n),) * 3, indexing="ij")
    assoc = Gt[Gt[X, Y], Z] * k + a_values
    idn = np.arange(n) * k
    return MonoidalGroupoid(np.eye(n, dtype=np.int64) * k, comp, 0, Gt, tm, assoc, idn, idn)


def builder_choice(G, H, a_values, u=None, v=None):
    """xbar = x^-1, i_x = (1, u(x)), e_x = (1, v(x)); defaults u = 0,
    v(x) = a(xbar, x, xbar), which satisfies both zig-zags."""
    n = G.order
    if hasattr(a_values, "values"):
        a_values = (a_values.values * H.strides).sum(axis=-1)
    a_values = np.asarray(a_values).reshape(n, n, n)
    inv = G.inverses
    u = [0] * n if u is None else u
    v = [int(a_values[inv[x], x, inv[x]]) for x in range(n)] if v is None else v
    return InverseChoice(tuple((inv[x], int(u[x]), int(v[x])) for x in range(n)))


def groupoid_from_quadruple(q):
    M = skeletal_groupoid(q.G, q.H, q.alpha, q.a)
    return M, builder_choice(q.G, q.H, q.a)


def groupoid_to_quadruple(M):
    """Read (G, H, alpha, a) off a skeletal monoidal groupoid with identity unitors."""
    from .twogroups import validate_quadruple

    n, u = M.n_objects, M.unit
    off = M.homs - np.diag(np.diag(M.homs))
    w = _first(off > 0)
    if w:
        raise NotSkeletal(f"objects {w[0]} and {w[1]} are isomorphic but distinct", witness=w)
    idn = M.identity
    bad = np.nonzero((M.lunit != idn) | (M.runit != idn))[0]
    if bad.size:
        raise UnitsNotIdentity(f"unitor at {int(bad[0])} is not an identity", witness=[int(bad[0])])
    # objects relabelled so the unit comes first
    order = [u] + [x for x in range(n) if x != u]
    pos = {x: j for j, x in enumerate(order)}
    try:
        G = validate_group([[pos[M.obj_tensor(x, y)] for y in order] for x in order])
    except AlgebraError as exc:
        raise NotWeak2Group(f"objects do not form a group: {exc}") from exc
    E = [M.id(u)] + [f for f in M.hom(u, u) if f != M.id(u)]
    epos = {f: j for j, f in enumerate(E)}
    Et = FiniteGroup(tuple(tuple(epos[int(M.comp[f, g])] for g in E) for f in E))
    for f in range(len(E)):
        for g in range(len(E)):
            if Et.table[f][g] != Et.table[g][f]:
                raise EndomorphismsNotAbelian(
                    f"endomorphisms {E[f]} and {E[g]} of the unit do not commute",
                    witness=[E[f], E[g]])
    A, iso = abelian_structure(Et)
    to_flat = {E[e]: j for j, e in enumerate(iso)}
    inv = G.inverses

    def onto_unit(f, x):
        # Aut(x) -> End(1), f -> f tensor 1_xbar
        return to_flat[M.tensor(f, M.id(order[inv[x]]))]

    perms = []
    for g in range(n):
        x, xb = order[g], order[inv[g]]
        perms.append([to_flat[M.tensor(M.tensor(M.id(x), E[iso[h]]), M.id(xb))]
                      for h in range(A.order)])
    alpha = validate_action(G, A, perms)
    Mod = Module(G, A, alpha)
    Gt = G.table
    vals = np.zeros((n, n, n, A.rank), dtype=np.int64)
    for g1, g2, g3 in product(range(n), repeat=3):
        f = M.a(order[g1], order[g2], order[g3])
        vals[g1, g2, g3] = A.decode(onto_unit(f, Gt[Gt[g1][g2]][g3]))
    for j in range(3):
        if vals[(slice(None),) * j + (0,)].any():
            raise NotNormalized(f"associator is not normalized in argument {j + 1}")
    return validate_quadruple(G, A, alpha, NormalizedCochain(Mod, 3, vals))


def strict_to_groupoid(st):
    """The monoidal groupoid underlying a strict 2-group (identity associator)."""
    n, m = st.C0.order, st.C1.order
    keyed = sorted(range(m), key=lambda f: (st.s(f), st.t(f), f))
    new = {f: j for j, f in enumerate(keyed)}
    homs = np.zeros((n, n), dtype=np.int64)
    for f in range(m):
        homs[st.s(f), st.t(f)] += 1
    comp = np.full((m, m), -1, dtype=np.int64)
    tm = np.zeros((m, m), dtype=np.int64)
    for f in range(m):
        for g in range(m):
            c = st.comp[f][g]
            if c >= 0:
                comp[new[f], new[g]] = new[c]
            tm[new[f], new[g]] = new[st.C1.mul(f, g)]
    T = st.C0.arr
    X, Y, Z = np.meshgrid(*(np.arange(n),) * 3, indexing="ij")
    idn = np.array([new[st.i(x)] for x in range(n)])
    return MonoidalGroupoid(homs, comp, 0, T, tm, idn[T[T[X, Y], Z]], idn, idn)


# ---------------------------------------------------------------------------
# monoidal functors and transformations


@dataclass(frozen=True, eq=False)
class MonoidalFunctor:
    """F on objects and morphisms with F2[x, y]: Fx Fy -> F(xy) and F0: 1' -> F1."""

    source: MonoidalGroupoid
    target: MonoidalGroupoid
    obj: np.ndarray
    mor: np.ndarray
    F2: np.ndarray
    F0: int


def check_monoidal_functor(F):
    S, T = F.source, F.target
    obj, mor, F2 = np.asarray(F.obj), np.asarray(F.mor), np.asarray(F.F2)
    n = S.n_objects
    if ((T.src[mor] != obj[S.src]) | (T.tgt[mor] != obj[S.tgt])).any():
        return FunctorialityFailed("functor sends a morphism to the wrong hom set")
    w = _first(mor[S.identity] != T.identity[obj])
    if w:
        return FunctorialityFailed("identity not preserved", witness=w)
    pf, pg, pc = _composable_pairs(S)
    w = _first(mor[pc] != T.comp[mor[pf], mor[pg]])
    if w:
        return FunctorialityFailed("composition not preserved",
                                   witness=[int(pf[w[0]]), int(pg[w[0]])])
    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    bad = (T.src[F2] != T.tensor_obj[obj[X], obj[Y]]) | (T.tgt[F2] != obj[S.tensor_obj[X, Y]])
    w = _first(bad)
    if w:
        return FunctorialityFailed("F2 component has the wrong type", witness=w)
    if T.src[F.F0] != T.unit or T.tgt[F.F0] != obj[S.unit]:
        return FunctorialityFailed("F0 has the wrong type")
    f, g = np.meshgrid(np.arange(S.n_morphisms), np.arange(S.n_morphisms), indexing="ij")
    lhs = T.comp[T.tensor_mor[mor[f], mor[g]], F2[S.tgt[f], S.tgt[g]]]
    rhs = T.comp[F2[S.src[f], S.src[g]], mor[S.tensor_mor[f, g]]]
    w = _first(lhs != rhs)
    if w:
        return NaturalityFailed("F2 not natural", witness=w)
    X, Y, Z = np.meshgrid(*(np.arange(n),) * 3, indexing="ij")
    St, C, TM, Tid = S.tensor_obj, T.comp, T.tensor_mor, T.identity
    lhs = C[C[TM[F2[X, Y], Tid[obj[Z]]], F2[St[X, Y], Z]], mor[S.assoc[X, Y, Z]]]
    rhs = C[C[T.assoc[obj[X], obj[Y], obj[Z]], TM[Tid[obj[X]], F2[Y, Z]]], F2[X, St[Y, Z]]]
    w = _first(lhs != rhs)
    if w:
        return CoherenceFailed("associativity square fails", witness=w)
    x = np.arange(n)
    u = S.unit
    lhs = C[C[TM[F.F0, Tid[obj[x]]], F2[u, x]], mor[S.lunit[x]]]
    w = _first(lhs != T.lunit[obj[x]])
    if w:
        return CoherenceFailed("left unit square fails", witness=w)
    lhs = C[C[TM[Tid[obj[x]], F.F0], F2[x, u]], mor[S.runit[x]]]
    w = _first(lhs != T.runit[obj[x]])
    if w:
        return CoherenceFailed("right unit square fails", witness=w)
    return None


def check_monoidal_transformation(F, G, theta):
    """theta[x]: Fx -> Gx natural and compatible with F2, G2, F0, G0."""
    S, T = F.source, F.target
    theta = np.asarray(theta)
    n = S.n_objects
    Fo, Go = np.asarray(F.obj), np.asarray(G.obj)
    if ((T.src[theta] != Fo) | (T.tgt[theta] != Go)).any():
        return NaturalityFailed("component has the wrong type")
    f = np.arange(S.n_morphisms)
    C = T.comp
    w = _first(C[np.asarray(F.mor)[f], theta[S.tgt]] != C[theta[S.src], np.asarray(G.mor)[f]])
    if w:
        return NaturalityFailed("transformation not natural", witness=w)
    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    lhs = C[T.tensor_mor[theta[X], theta[Y]], np.asarray(G.F2)[X, Y]]
    rhs = C[np.asarray(F.F2)[X, Y], theta[S.tensor_obj[X, Y]]]
    w = _first(lhs != rhs)
    if w:
        return CoherenceFailed("tensor square fails", witness=w)
    if C[F.F0, theta[S.unit]] != G.F0:
        return CoherenceFailed("unit triangle fails")
    return None


def compose_functors(F, G):
    """F then G."""
    T = G.target
    obj = np.asarray(G.obj)[np.asarray(F.obj)]
    mor = np.asarray(G.mor)[np.asarray(F.mor)]
    n = F.source.n_objects
    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    Fo = np.asarray(F.obj)
    F2 = T.comp[np.asarray(G.F2)[Fo[X], Fo[Y]], np.asarray(G.mor)[np.asarray(F.F2)[X, Y]]]
    F0 = T.then(G.F0, int(np.asarray(G.mor)[F.F0]))
    return MonoidalFunctor(F.source, T, obj, mor, F2, F0)


def h1_holds(F, src_choice, tgt_choice, x, fm1):
    """i'_{Fx} ; (1 tensor F_-1) ; F2_{x,xbar} == F0 ; F(i_x)."""
    T = F.target
    xbar, i, _ = src_choice[x]
    Fx = int(F.obj[x])
    _, ti, _ = tgt_choice[Fx]
    lhs = T.then(ti, T.tensor(T.id(Fx), fm1), int(F.F2[x, xbar]))
    return lhs == T.then(F.F0, int(F.mor[i]))


def h2_holds(F, src_choice, tgt_choice, x, fm1):
    """e'_{Fx} ; F0 == (F_-1 tensor 1) ; F2_{xbar,x} ; F(e_x)."""
    T = F.target
    xbar, _, e = src_choice[x]
    Fx = int(F.obj[x])
    _, _, te = tgt_choice[Fx]
    rhs = T.then(T.tensor(fm1, T.id(Fx)), int(F.F2[xbar, x]), int(F.mor[e]))
    return T.then(te, F.F0) == rhs


def solve_F_minus1(F, src_choice, tgt_choice, x):
    """Every morphism overline{Fx} -> F(xbar) satisfying H1 at x."""
    T = F.target
    Fx = int(F.obj[x])
    xbar = src_choice[x][0]
    cands = T.hom(tgt_choice[Fx][0], int(F.obj[xbar]))
    return [f for f in cands if h1_holds(F, src_choice, tgt_choice, x, f)]
