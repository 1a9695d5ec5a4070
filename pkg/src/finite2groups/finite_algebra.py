"""Finite groups on Cayley tables, finite abelian groups, actions, homomorphism
search and the integer Smith normal form.

Group elements are integer indices and the identity is always index 0.
Every table is stored as a tuple of tuples so that values are immutable and
hashable; numpy views are built lazily where vectorised checks pay off.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from math import gcd, prod

import numpy as np

from .errors import (
    IdentityNotFixed,
    InvalidOrder,
    MissingInverse,
    NoIdentityAtZero,
    NotAssociative,
    NotAutomorphism,
    NotClosed,
    NotHomomorphic,
    OrderBoundExceeded,
)

DEFAULT_MAX_ORDER = 24


# ---------------------------------------------------------------------------
# finite groups


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i][j]`` is the index of ``g_i * g_j``. Build instances through
    :func:`validate_group` or one of the constructors below; the dataclass
    itself performs no checks.
    """

    table: tuple

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @cached_property
    def arr(self):
        return np.array(self.table, dtype=np.int64).reshape(self.order, self.order)

    def mul(self, a, b):
        return self.table[a][b]

    @cached_property
    def inverses(self):
        return tuple(row.index(0) for row in self.table)

    def inv(self, a):
        return self.inverses[a]

    def conj(self, g, h):
        """g h g^-1"""
        return self.table[self.table[g][h]][self.inverses[g]]

    def power(self, a, n):
        x = 0
        for _ in range(n % self.element_order(a)):
            x = self.table[x][a]
        return x

    @cached_property
    def element_orders(self):
        out = []
        for a in range(self.order):
            x, n = a, 1
            while x != 0:
                x = self.table[x][a]
                n += 1
            out.append(n)
        return tuple(out)

    def element_order(self, a):
        return self.element_orders[a]

    @cached_property
    def is_abelian(self):
        return bool((self.arr == self.arr.T).all())

    @cached_property
    def exponent(self):
        e = 1
        for n in self.element_orders:
            e = e * n // gcd(e, n)
        return e

    def generated(self, gens):
        """Sorted list of the elements of the subgroup generated by ``gens``."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.table[x][s]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @cached_property
    def generators(self):
        """A small generating set, chosen greedily by descending element order."""
        gens = []
        span = {0}
        by_order = sorted(range(1, self.order), key=lambda a: (-self.element_orders[a], a))
        for a in by_order:
            if a not in span:
                gens.append(a)
                span = set(self.generated(gens))
                if len(span) == self.order:
                    break
        return tuple(gens)

    @cached_property
    def center(self):
        T = self.arr
        return tuple(int(z) for z in range(self.order) if (T[z, :] == T[:, z]).all())

    def to_json(self):
        return {"kind": "group", "order": self.order, "table": [list(r) for r in self.table]}


def validate_group(table):
    """Check the group axioms on a square index table and return the group.

    Raises the first violated law: ``NotClosed``, ``NoIdentityAtZero``,
    ``MissingInverse`` or ``NotAssociative``.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise InvalidOrder("empty table")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise NotClosed(f"row {i} has length {len(r)}, expected {n}", witness=[i])
        for j, v in enumerate(r):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise NotClosed(f"entry ({i},{j}) = {v!r} out of range", witness=[i, j])
    T = np.array(rows, dtype=np.int64)
    ident = np.arange(n)
    bad = np.nonzero(T[0] != ident)[0]
    if bad.size:
        raise NoIdentityAtZero(f"0*{bad[0]} != {bad[0]}", witness=[0, int(bad[0])])
    bad = np.nonzero(T[:, 0] != ident)[0]
    if bad.size:
        raise NoIdentityAtZero(f"{bad[0]}*0 != {bad[0]}", witness=[int(bad[0]), 0])
    srt = np.sort(T, axis=1)
    for i in range(n):
        if not (srt[i] == ident).all():
            raise MissingInverse(f"row {i} is not a permutation", witness=[i])
    srt = np.sort(T, axis=0)
    for j in range(n):
        if not (srt[:, j] == ident).all():
            raise MissingInverse(f"column {j} is not a permutation", witness=[j])
    left = T[T[:, :, None], ident[None, None, :]]  # (ij)k
    right = T[ident[:, None, None], T[None, :, :]]  # i(jk)
    bad = np.argwhere(left != right)
    if bad.size:
        i, j, k = (int(v) for v in bad[0])
        raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})", witness=[i, j, k])
    return FiniteGroup(tuple(tuple(int(v) for v in r) for r in rows))


def cyclic_group(n):
    if n < 1:
        raise InvalidOrder(f"cyclic group of order {n}")
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def trivial_group():
    return cyclic_group(1)


def direct_product(G, K):
    """G x K with the pair (a, b) stored at index ``a + |G| * b``."""
    m, n = G.order, K.order
    rows = []
    for idx in range(m * n):
        a, b = idx % m, idx // m
        rows.append(tuple(G.table[a][c % m] + m * K.table[b][c // m] for c in range(m * n)))
    return FiniteGroup(tuple(rows))


def group_from_permutations(perms):
    """The group of the given permutations under composition.

    ``perms`` must be closed under composition and contain the identity
    first; ``table[i][j]`` is the index of ``perms[i] o perms[j]``.
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    rows = []
    for p in perms:
        rows.append(tuple(index[tuple(p[x] for x in q)] for q in perms))
    return validate_group(rows)


def symmetric_group(n):
    """S_n on sorted permutation tuples; the identity sorts first."""
    return group_from_permutations(sorted(permutations(range(n))))


def dihedral_group(n):
    """Symmetries of the n-gon (order 2n) as permutations of its vertices."""
    rots = [tuple((i + r) % n for i in range(n)) for r in range(n)]
    refl = [tuple((r - i) % n for i in range(n)) for r in range(n)]
    return group_from_permutations(sorted(set(rots + refl)))


def subgroup(G, elements):
    """Materialise a subgroup as its own group.

    Returns ``(H, embed)`` where ``embed[i]`` is the index in ``G`` of the
    i-th element of ``H``; elements keep their relative order in ``G``.
    """
    elems = sorted(set(elements))
    if not elems or elems[0] != 0:
        raise NotClosed("subgroup must contain the identity")
    pos = {g: i for i, g in enumerate(elems)}
    rows = []
    for a in elems:
        row = []
        for b in elems:
            c = G.table[a][b]
            if c not in pos:
                raise NotClosed(f"{a}*{b} leaves the subset", witness=[a, b])
            row.append(pos[c])
        rows.append(tuple(row))
    return FiniteGroup(tuple(rows)), tuple(elems)


def isomorphisms(G, K):
    """All isomorphisms G -> K as index tuples (lexicographic)."""
    if G.order != K.order or sorted(G.element_orders) != sorted(K.element_orders):
        return []
    return [h.map for h in enumerate_homs(G, K) if len(set(h.map)) == K.order]


# ---------------------------------------------------------------------------
# finite abelian groups


@dataclass(frozen=True)
class FinAbGroup:
    """Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2.

    Elements are k-tuples. The flat index of ``(a_1, ..., a_k)`` is
    ``sum a_i * prod_{j<i} d_j`` (first factor least significant).
    """

    invariant_factors: tuple = ()

    def __post_init__(self):
        d = tuple(int(x) for x in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", d)
        for i, x in enumerate(d):
            if x < 2:
                raise InvalidOrder(f"invariant factor {x} < 2")
            if i and x % d[i - 1]:
                raise InvalidOrder(f"{d[i - 1]} does not divide {x}")

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def order(self):
        return prod(self.invariant_factors)

    def __len__(self):
        return self.order

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @cached_property
    def moduli(self):
        return np.array(self.invariant_factors, dtype=np.int64)

    @cached_property
    def strides(self):
        s, out = 1, []
        for d in self.invariant_factors:
            out.append(s)
            s *= d
        return np.array(out, dtype=np.int64)

    def encode(self, elem):
        elem = tuple(elem)
        if len(elem) != self.rank:
            raise ValueError(f"expected {self.rank} components, got {len(elem)}")
        idx, s = 0, 1
        for a, d in zip(elem, self.invariant_factors):
            idx += (a % d) * s
            s *= d
        return idx

    def decode(self, idx):
        out = []
        for d in self.invariant_factors:
            out.append(idx % d)
            idx //= d
        return tuple(out)

    @cached_property
    def elements(self):
        """(order, rank) array; row i is the decoding of flat index i."""
        idx = np.arange(self.order)
        if not self.rank:
            return np.zeros((self.order, 0), dtype=np.int64)
        return (idx[:, None] // self.strides[None, :]) % self.moduli[None, :]

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.invariant_factors))

    def zero(self):
        return (0,) * self.rank

    def reduce(self, arr):
        """Reduce an integer array whose last axis runs over components."""
        return np.asarray(arr, dtype=np.int64) % self.moduli

    def generator(self, i):
        e = [0] * self.rank
        e[i] = 1
        return tuple(e)

    @cached_property
    def as_group(self):
        """The same group as a Cayley table on flat indices."""
        E = self.elements
        S = (E[:, None, :] + E[None, :, :]) % self.moduli
        T = (S * self.strides).sum(axis=-1)
        return FiniteGroup(tuple(tuple(int(v) for v in r) for r in T.reshape(self.order, self.order)))

    def to_json(self):
        return {"kind": "abelian", "invariant_factors": list(self.invariant_factors)}


def torsion_counts_to_invariant_factors(order, count):
    """Invariant factors of a finite abelian group from its torsion counts.

    ``count(m)`` must return ``|{x : m x = 0}|``. Used to recover the
    structure of a quotient found by enumeration.
    """
    factors = {}
    n = order
    p = 2
    primes = []
    while p * p <= n:
        while n % p == 0:
            if p not in primes:
                primes.append(p)
            n //= p
        p += 1
    if n > 1:
        primes.append(n)
    for p in primes:
        # number of cyclic factors of order >= p^j is log_p(|A[p^j]| / |A[p^(j-1)]|)
        sizes = [1]
        j = 1
        while True:
            c = count(p ** j)
            sizes.append(c)
            if c == sizes[-2]:
                break
            j += 1
        at_least = []
        for j in range(1, len(sizes)):
            r, q = 0, sizes[j] // sizes[j - 1]
            while q > 1:
                q //= p
                r += 1
            at_least.append(r)
        exps = []
        for j, r in enumerate(at_least, start=1):
            nxt = at_least[j] if j < len(at_least) else 0
            exps += [j] * (r - nxt)
        factors[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in factors.values()), default=0)
    out = [1] * width
    for p, exps in factors.items():
        for i, e in enumerate(exps):
            out[width - 1 - i] *= p ** e
    return tuple(d for d in out if d > 1)


def abelian_structure(G):
    """Decompose an abelian Cayley-table group.

    Returns ``(A, iso)`` where ``A`` is a :class:`FinAbGroup` and ``iso[i]``
    is the index in ``G`` of ``A``'s flat element ``i``. If ``G`` already is
    ``A.as_group`` under the identity labelling, ``iso`` is the identity.
    """
    if not G.is_abelian:
        raise ValueError("group is not abelian")
    n = G.order

    def count(m):
        return sum(1 for x in range(n) if G.power(x, m) == 0)

    A = FinAbGroup(torsion_counts_to_invariant_factors(n, count))
    if A.as_group.table == G.table:
        return A, tuple(range(n))
    d = A.invariant_factors
    cands = [[x for x in range(n) if G.element_order(x) == di] for di in d]
    for gens in product(*cands):
        iso = []
        for idx in range(A.order):
            x = 0
            for c, g in zip(A.decode(idx), gens):
                x = G.table[x][G.power(g, c)]
            iso.append(x)
        if len(set(iso)) == n:
            return A, tuple(iso)
    raise AssertionError("no basis found for abelian group")  # unreachable for abelian G


# ---------------------------------------------------------------------------
# homomorphisms and actions


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    map: tuple

    def __call__(self, g):
        return self.map[g]

    @property
    def is_injective(self):
        return len(set(self.map)) == len(self.map)

    @property
    def is_surjective(self):
        return len(set(self.map)) == self.target.order

    @cached_property
    def kernel(self):
        return tuple(g for g, v in enumerate(self.map) if v == 0)

    def then(self, other):
        """Composite: apply ``self`` first, then ``other``."""
        return GroupHom(self.source, other.target, tuple(other.map[v] for v in self.map))


def hom_violation(G, K, mapping):
    """First pair (g, h) with f(gh) != f(g) f(h), or None."""
    M = np.asarray(mapping, dtype=np.int64)
    lhs = M[G.arr]
    rhs = K.arr[M[:, None], M[None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return [int(bad[0][0]), int(bad[0][1])]
    return None


def validate_hom(G, K, mapping):
    mapping = tuple(int(v) for v in mapping)
    if len(mapping) != G.order or any(not 0 <= v < K.order for v in mapping):
        raise NotHomomorphic("map has wrong length or values out of range")
    w = hom_violation(G, K, mapping)
    if w is not None:
        raise NotHomomorphic(f"f({w[0]}*{w[1]}) != f({w[0]})*f({w[1]})", witness=w)
    return GroupHom(G, K, mapping)


def _extend_from_generators(G, K, gens, images):
    """Extend generator images to a full map, or None if inconsistent."""
    m = [-1] * G.order
    m[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = G.table[x][s]
                v = K.table[m[x]][t]
                if m[y] == -1:
                    m[y] = v
                    nxt.append(y)
                elif m[y] != v:
                    return None
        frontier = nxt
    return tuple(m)


def _hom_maps(G, K, injective=False):
    gens = G.generators
    choices = []
    for s in gens:
        o = G.element_order(s)
        if injective:
            choices.append([t for t in range(K.order) if K.element_order(t) == o])
        else:
            choices.append([t for t in range(K.order) if o % K.element_order(t) == 0])
    out = []
    for imgs in product(*choices):
        m = _extend_from_generators(G, K, gens, imgs)
        if m is None:
            continue
        if injective and len(set(m)) != len(m):
            continue
        if hom_violation(G, K, m) is None:
            out.append(m)
    return sorted(out)


def enumerate_homs(G, K):
    """Every homomorphism G -> K, ordered lexicographically by map table."""
    return [GroupHom(G, K, m) for m in _hom_maps(G, K)]


def automorphism_group(H, max_order=DEFAULT_MAX_ORDER):
    """Aut(H) as a Cayley table together with its tautological action on H.

    Elements are ordered lexicographically by permutation table, so the
    identity is element 0; ``table[i][j]`` is the index of ``perm_i o perm_j``.
    """
    if H.order > max_order:
        raise OrderBoundExceeded(f"|H| = {H.order} exceeds bound {max_order}")
    perms = _hom_maps(H, H, injective=True)
    A = group_from_permutations(perms)
    return A, GAction(A, H.order, tuple(perms))


@dataclass(frozen=True)
class GAction:
    """G acting on a target group by automorphisms: ``perms[g][x] = g . x``."""

    group: FiniteGroup
    target_order: int
    perms: tuple

    @cached_property
    def arr(self):
        return np.array(self.perms, dtype=np.int64).reshape(self.group.order, self.target_order)

    def __call__(self, g, x):
        return self.perms[g][x]

    @property
    def is_trivial(self):
        return all(p == tuple(range(self.target_order)) for p in self.perms)

    def pullback(self, phi):
        """The action of phi's source obtained by acting through phi."""
        return GAction(phi.source, self.target_order, tuple(self.perms[v] for v in phi.map))

    def to_json(self):
        return {"kind": "action", "perms": [list(p) for p in self.perms]}


def _target_table(target):
    if isinstance(target, FinAbGroup):
        return target.as_group
    return target


def trivial_action(G, target):
    n = target.order
    return GAction(G, n, tuple(tuple(range(n)) for _ in range(G.order)))


def validate_action(G, target, perms):
    """Check that ``perms`` is an action of G by automorphisms of ``target``.

    ``target`` is a :class:`FiniteGroup` or a :class:`FinAbGroup` (flat index
    encoding).
    """
    T = _target_table(target)
    n = T.order
    perms = tuple(tuple(int(v) for v in p) for p in perms)
    if len(perms) != G.order:
        raise NotHomomorphic(f"need {G.order} permutations, got {len(perms)}")
    for g, p in enumerate(perms):
        if sorted(p) != list(range(n)):
            raise NotAutomorphism(f"perms[{g}] is not a permutation of the target", witness=[g])
    if perms[0] != tuple(range(n)):
        raise IdentityNotFixed("the identity of G does not act trivially", witness=[0])
    P = np.array(perms, dtype=np.int64).reshape(G.order, n)
    for g in range(G.order):
        if P[g, 0] != 0:
            raise NotAutomorphism(f"perms[{g}] moves the identity", witness=[g])
        w = hom_violation(T, T, P[g])
        if w is not None:
            raise NotAutomorphism(f"perms[{g}] is not multiplicative", witness=[g] + w)
    # perms[gh] = perms[g] o perms[h]
    for g in range(G.order):
        lhs = P[G.arr[g]]  # rows: perms[g h] for every h
        rhs = P[g][P]  # perms[g] o perms[h]
        bad = np.nonzero((lhs != rhs).any(axis=1))[0]
        if bad.size:
            raise NotHomomorphic(f"perms[{g}*{bad[0]}] != perms[{g}] o perms[{bad[0]}]",
                                 witness=[g, int(bad[0])])
    return GAction(G, n, perms)


def conjugation_action(G):
    return GAction(G, G.order, tuple(tuple(G.conj(g, h) for h in range(G.order))
                                     for g in range(G.order)))


def enumerate_actions(G, target, max_order=DEFAULT_MAX_ORDER):
    """Every action of G on ``target`` by automorphisms, via Hom(G, Aut)."""
    A, taut = automorphism_group(_target_table(target), max_order)
    return [GAction(G, taut.target_order, tuple(taut.perms[v] for v in h.map))
            for h in enumerate_homs(G, A)]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class IntMatrixSNF:
    """``U M V = D`` with U, V unimodular and D diagonal, d_1 | d_2 | ...

    ``U_inv`` is carried along because lattice bases are read off it.
    """

    U: list
    D: list
    V: list
    U_inv: list = field(default=None, repr=False)

    @property
    def diagonal(self):
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, ncols=None, want_U=True, want_V=True):
    """Smith normal form over the integers with exact Python ints.

    ``ncols`` is only needed for matrices with zero rows. Transform tracking
    can be switched off for speed when only one side is needed.
    """
    A = [[int(v) for v in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    U = _identity(m) if want_U else None
    Ui = _identity(m) if want_U else None
    V = _identity(n) if want_V else None

    def row_add(i, j, q):  # row_i += q row_j
        if q == 0:
            return
        Ai, Aj = A[i], A[j]
        A[i] = [a + q * b for a, b in zip(Ai, Aj)]
        if U is not None:
            U[i] = [a + q * b for a, b in zip(U[i], U[j])]
            for r in Ui:
                r[j] -= q * r[i]

    def row_swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def row_neg(i):
        A[i] = [-a for a in A[i]]
        if U is not None:
            U[i] = [-a for a in U[i]]
            for r in Ui:
                r[i] = -r[i]

    def col_add(i, j, q):  # col_i += q col_j
        if q == 0:
            return
        for r in A:
            if r[j]:
                r[i] += q * r[j]
        if V is not None:
            for r in V:
                if r[j]:
                    r[i] += q * r[j]

    def col_swap(i, j):
        if i == j:
            return
        for r in A:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                row_swap(t, i)
                col_swap(t, j)
                continue
            bad = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            row_neg(t)
    return IntMatrixSNF(U, A, V, Ui)


def int_det(M):
    """Exact determinant by fraction-free Bareiss elimination."""
    A = [[int(v) for v in r] for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def matmul(A, B):
    Bt = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]
