"""Normalized bar complex of a finite group with coefficients in a finite
abelian G-module.

A normalized n-cochain is stored densely as an integer array of shape
``(|G|,) * n + (k,)`` holding the coordinates of its values in
``H = Z/d_1 + ... + Z/d_k``; entries on tuples containing the identity are
zero. For the linear algebra, cochains are flattened to coordinate vectors
over the non-identity tuples only.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .errors import BoundExceeded, MismatchedModule, NotNormalized
from .finite_algebra import FinAbGroup, FiniteGroup, GAction, smith_normal_form, trivial_action

DEFAULT_MAX_COORDS = 6000


@dataclass(frozen=True)
class Module:
    """A finite abelian group ``coeffs`` with ``group`` acting through ``action``."""

    group: FiniteGroup
    coeffs: FinAbGroup
    action: GAction

    @classmethod
    def trivial(cls, G, H):
        return cls(G, H, trivial_action(G, H))

    @cached_property
    def act_mats(self):
        """``act_mats[g]`` is an integer matrix lifting the action of g on coordinates."""
        H = self.coeffs
        k = H.rank
        mats = np.zeros((self.group.order, k, k), dtype=np.int64)
        for g in range(self.group.order):
            for j in range(k):
                img = self.action.perms[g][H.encode(H.generator(j))]
                mats[g, :, j] = H.decode(img)
        return mats

    def act(self, g, values):
        """Apply g to an array whose last axis holds coordinates."""
        return (np.asarray(values) @ self.act_mats[g].T) % self.coeffs.moduli

    @cached_property
    def _cache(self):
        return {}

    def coord_count(self, n):
        return (self.group.order - 1) ** n * self.coeffs.rank


# ---------------------------------------------------------------------------
# cochains


@dataclass(frozen=True, eq=False)
class NormalizedCochain:
    module: Module
    degree: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64)
        shape = (self.module.group.order,) * self.degree + (self.module.coeffs.rank,)
        if v.shape != shape:
            raise ValueError(f"values have shape {v.shape}, expected {shape}")
        v = v % self.module.coeffs.moduli if self.module.coeffs.rank else v
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __call__(self, *gs):
        return tuple(int(x) for x in self.values[tuple(gs)])

    def _check(self, other):
        if not isinstance(other, NormalizedCochain):
            return NotImplemented
        if other.module != self.module or other.degree != self.degree:
            raise MismatchedModule("cochains live in different modules or degrees")
        return True

    def __eq__(self, other):
        if not isinstance(other, NormalizedCochain):
            return NotImplemented
        return (self.module == other.module and self.degree == other.degree
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.degree, self.values.tobytes()))

    def __add__(self, other):
        self._check(other)
        return NormalizedCochain(self.module, self.degree, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return NormalizedCochain(self.module, self.degree, self.values - other.values)

    def __neg__(self):
        return NormalizedCochain(self.module, self.degree, -self.values)

    def __rmul__(self, c):
        return NormalizedCochain(self.module, self.degree, int(c) * self.values)

    def is_zero(self):
        return not self.values.any()

    def vector(self):
        """Coordinate vector over the non-identity tuples (first argument fastest)."""
        sub = self.values[(slice(1, None),) * self.degree]
        # first argument least significant, so reverse the tuple axes
        sub = np.transpose(sub, tuple(range(self.degree))[::-1] + (self.degree,))
        return [int(x) for x in sub.reshape(-1)]

    def to_flat(self):
        """Values over all of G^n, first argument least significant."""
        n = self.degree
        v = np.transpose(self.values, tuple(range(n))[::-1] + (n,))
        rows = self.module.group.order ** n
        return [[int(x) for x in row] for row in v.reshape(rows, self.module.coeffs.rank)]

    def to_json(self):
        return {"kind": "cochain", "degree": self.degree, "values": self.to_flat()}


def zero_cochain(module, n):
    shape = (module.group.order,) * n + (module.coeffs.rank,)
    return NormalizedCochain(module, n, np.zeros(shape, dtype=np.int64))


def cochain_from_function(module, n, fn):
    """Tabulate ``fn(g_1, ..., g_n)`` (an H-tuple) over G^n."""
    m = module.group.order
    vals = np.zeros((m,) * n + (module.coeffs.rank,), dtype=np.int64)
    for gs in product(range(m), repeat=n):
        if 0 in gs:
            continue
        vals[gs] = fn(*gs)
    return NormalizedCochain(module, n, vals)


def cochain_from_vector(module, n, vec):
    m, k = module.group.order, module.coeffs.rank
    vals = np.zeros((m,) * n + (k,), dtype=np.int64)
    if m > 1 or n == 0:
        sub = np.asarray(vec, dtype=np.int64).reshape((m - 1,) * n + (k,))
        sub = np.transpose(sub, tuple(range(n))[::-1] + (n,))
        vals[(slice(1, None),) * n] = sub
    return NormalizedCochain(module, n, vals)


def cochain_from_flat(module, n, flat, check=True):
    """Inverse of :meth:`NormalizedCochain.to_flat`; rejects unnormalized tables."""
    m, k = module.group.order, module.coeffs.rank
    arr = np.asarray(flat, dtype=np.int64).reshape(m ** n, k)
    vals = np.transpose(arr.reshape((m,) * n + (k,)), tuple(range(n))[::-1] + (n,))
    vals = np.ascontiguousarray(vals)
    if check:
        d = module.coeffs.moduli
        if ((vals < 0) | (vals >= d)).any():
            raise NotNormalized("cochain value out of range")
        for i in range(n):
            idx = (slice(None),) * i + (0,)
            if vals[idx].any():
                raise NotNormalized(f"nonzero value with identity in argument {i + 1}")
    return NormalizedCochain(module, n, vals)


def random_cochain(module, n, rng):
    m, d = module.group.order, module.coeffs.moduli
    vals = rng.integers(0, 1 << 30, size=(m,) * n + (module.coeffs.rank,)) % d
    for i in range(n):
        vals[(slice(None),) * i + (0,)] = 0
    return NormalizedCochain(module, n, vals)


# ---------------------------------------------------------------------------
# differential


def differential(f):
    """Bar differential of a normalized n-cochain.

    (df)(g_0..g_n) = g_0 f(g_1..g_n) + sum_{i=1}^n (-1)^i f(.., g_{i-1} g_i, ..)
                     + (-1)^(n+1) f(g_0..g_{n-1})
    """
    M = f.module
    G, n, m = M.group, f.degree, M.group.order
    F = f.values
    idx = np.indices((m,) * (n + 1))
    T = G.arr
    # g_0 acting on f(g_1..g_n)
    tail = F[tuple(idx[1:])]
    out = np.einsum("...j,...ij->...i", tail, M.act_mats[idx[0]])
    for i in range(1, n + 1):
        args = [idx[j] for j in range(i - 1)] + [T[idx[i - 1], idx[i]]] + \
            [idx[j] for j in range(i + 1, n + 1)]
        out = out + (-1) ** i * F[tuple(args)]
    out = out + (-1) ** (n + 1) * F[tuple(idx[:n])]
    return NormalizedCochain(M, n + 1, out)


def is_cocycle(f):
    return differential(f).is_zero()


# ---------------------------------------------------------------------------
# integer matrices of the complex


def _check_size(module, n, max_coords):
    if module.coord_count(n) > max_coords:
        raise BoundExceeded(f"{module.coord_count(n)} coordinates in degree {n} exceed {max_coords}")


def differential_matrix(module, n):
    """Integer matrix of d: C^n -> C^{n+1} on normalized coordinate vectors."""
    key = ("D", n)
    if key in module._cache:
        return module._cache[key]
    G, k, m = module.group, module.coeffs.rank, module.group.order
    r = m - 1
    rows, cols = r ** (n + 1) * k, r ** n * k
    D = [[0] * cols for _ in range(rows)]
    A = module.act_mats.tolist()

    def pos(gs):
        p, s = 0, 1
        for g in gs:
            if g == 0:
                return None
            p += (g - 1) * s
            s *= r
        return p * k

    for t in product(range(1, m), repeat=n + 1):
        # first argument least significant in the row ordering
        gs = t[::-1]
        base = pos(gs)
        c = pos(gs[1:])
        if c is not None:
            Ag = A[gs[0]]
            for a in range(k):
                row = D[base + a]
                for b in range(k):
                    row[c + b] += Ag[a][b]
        for i in range(1, n + 1):
            merged = gs[:i - 1] + (G.table[gs[i - 1]][gs[i]],) + gs[i + 1:]
            c = pos(merged)
            if c is not None:
                for a in range(k):
                    D[base + a][c + a] += (-1) ** i
        c = pos(gs[:n])
        if c is not None:
            for a in range(k):
                D[base + a][c + a] += (-1) ** (n + 1)
    module._cache[key] = D
    return D


def _relations(module, n):
    d = module.coeffs.invariant_factors
    return [d[j % len(d)] for j in range(module.coord_count(n))] if d else []


def _with_relations(D, rel, ncols):
    """[D | diag(rel)] as a list of rows."""
    out = []
    for i, row in enumerate(D):
        extra = [0] * len(rel)
        extra[i] = rel[i]
        out.append(list(row) + extra)
    return out


# ---------------------------------------------------------------------------
# cohomology groups


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    """H^n(G, H) with chosen cocycle representatives of its cyclic generators.

    ``project`` sends a cocycle to its class coordinates, one entry per
    invariant factor.
    """

    module: Module
    degree: int
    invariant_factors: tuple
    representatives: tuple
    _kernel_U: list = field(repr=False, default=None)
    _kernel_sigma: list = field(repr=False, default=None)
    _proj_rows: list = field(repr=False, default=None)

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def project(self, f):
        if f.module != self.module or f.degree != self.degree:
            raise MismatchedModule("cochain does not belong to this cohomology group")
        if not self.invariant_factors:
            return ()
        x = f.vector()
        y = []
        for row, s in zip(self._kernel_U, self._kernel_sigma):
            v = sum(a * b for a, b in zip(row, x))
            if v % s:
                raise ValueError("not a cocycle")
            y.append(v // s)
        return tuple(sum(a * b for a, b in zip(row, y)) % t
                     for row, t in zip(self._proj_rows, self.invariant_factors))

    def cocycle(self, coords):
        """The representative combination sum c_i rep_i."""
        out = zero_cochain(self.module, self.degree)
        for c, rep in zip(coords, self.representatives):
            out = out + int(c) * rep
        return out

    def elements(self):
        """All class coordinate tuples, lexicographic."""
        return list(product(*(range(d) for d in self.invariant_factors)))

    def to_json(self, reps=False):
        out = {"invariant_factors": list(self.invariant_factors)}
        if reps:
            out["representatives"] = [r.to_json() for r in self.representatives]
        return out


def _kernel_lattice(module, n):
    """Basis data for the lattice of integer lifts of n-cocycles.

    Returns ``(U, sigma, Uinv)`` with the lattice basis ``Uinv[:, i] * sigma[i]``
    and ``B^-1 x = diag(sigma)^-1 U x``.
    """
    key = ("ker", n)
    if key in module._cache:
        return module._cache[key]
    N = module.coord_count(n)
    D = differential_matrix(module, n)
    rel = _relations(module, n + 1)
    A = _with_relations(D, rel, N)
    if A:
        snf = smith_normal_form(A, want_U=False)
        r = snf.rank
        V = snf.V
        gens = [row[r:] for row in V[:N]]
    else:
        gens = [[int(i == j) for j in range(N)] for i in range(N)]
    if N == 0:
        out = ([], [], [])
    else:
        s2 = smith_normal_form(gens, want_V=False)
        sigma = s2.diagonal[:N]
        if len(sigma) < N or 0 in sigma:
            raise AssertionError("cocycle lattice is not of full rank")
        out = (s2.U, sigma, s2.U_inv)
    module._cache[key] = out
    return out


def cohomology_group(module, n, max_coords=DEFAULT_MAX_COORDS):
    """H^n = ker d_n / im d_{n-1} on the normalized complex, via Smith forms."""
    key = ("H", n)
    if key in module._cache:
        return module._cache[key]
    if n < 0:
        raise ValueError("degree must be >= 0")
    _check_size(module, n + 1, max_coords)
    N = module.coord_count(n)
    if N == 0:
        H = CohomologyGroup(module, n, (), (), [], [], [])
        module._cache[key] = H
        return H
    U, sigma, Uinv = _kernel_lattice(module, n)
    # generators of the coboundary lattice (plus the relations of C^n)
    rel = _relations(module, n)
    Dprev = differential_matrix(module, n - 1) if n > 0 else [[] for _ in range(N)]
    Y = _with_relations(Dprev, rel, N)
    # coordinates in the cocycle basis: diag(sigma)^-1 U Y
    Z = []
    for row, s in zip(U, sigma):
        out = []
        for col in zip(*Y):
            v = sum(a * b for a, b in zip(row, col) if b)
            if v % s:
                raise AssertionError("coboundary outside the cocycle lattice")
            out.append(v // s)
        Z.append(out)
    snf = smith_normal_form(Z, want_V=False)
    diag = snf.diagonal
    if len(diag) < N or 0 in diag[:N]:
        raise AssertionError("cohomology of a finite module must be finite")
    keep = [i for i in range(N) if diag[i] > 1]
    factors = tuple(diag[i] for i in keep)
    moduli = rel
    reps = []
    for i in keep:
        # B U_Z^-1 e_i with B = Uinv diag(sigma)
        col = [snf.U_inv[j][i] * sigma[j] for j in range(N)]
        vec = [sum(Uinv[a][j] * col[j] for j in range(N)) % moduli[a] for a in range(N)]
        reps.append(cochain_from_vector(module, n, vec))
    proj_rows = [snf.U[i] for i in keep]
    H = CohomologyGroup(module, n, factors, tuple(reps), U, sigma, proj_rows)
    module._cache[key] = H
    return H


def _coboundary_system(module, n):
    key = ("cob", n)
    if key not in module._cache:
        N = module.coord_count(n)
        Dprev = differential_matrix(module, n - 1)
        A = _with_relations(Dprev, _relations(module, n), N)
        module._cache[key] = smith_normal_form(A, ncols=module.coord_count(n - 1) + N)
    return module._cache[key]


def is_coboundary(f, max_coords=DEFAULT_MAX_COORDS):
    """A normalized (n-1)-cochain w with dw = f, or None."""
    module, n = f.module, f.degree
    if n == 0:
        return None
    _check_size(module, n, max_coords)
    if f.is_zero():
        return zero_cochain(module, n - 1)
    if module.coord_count(n - 1) == 0:
        return None
    snf = _coboundary_system(module, n)
    x = f.vector()
    b = [sum(a * v for a, v in zip(row, x) if v) for row in snf.U]
    diag = snf.diagonal
    z = []
    for i, bi in enumerate(b):
        s = diag[i] if i < len(diag) else 0
        if s == 0:
            if bi:
                return None
            z.append(0)
        else:
            if bi % s:
                return None
            z.append(bi // s)
    z += [0] * (len(snf.V) - len(z))
    Np = module.coord_count(n - 1)
    rel = _relations(module, n - 1)
    w = [sum(snf.V[i][j] * z[j] for j in range(len(z)) if z[j]) % rel[i] for i in range(Np)]
    out = cochain_from_vector(module, n - 1, w)
    if differential(out) != f:
        raise AssertionError("coboundary solver produced a wrong witness")
    return out


def classes_equal(f, g):
    if f.module != g.module or f.degree != g.degree:
        raise MismatchedModule("cochains live in different modules or degrees")
    return is_coboundary(f - g) is not None


def closed_cochains(module, n, cap=100000):
    """All normalized n-cocycles, enumerated from the cocycle lattice basis."""
    N = module.coord_count(n)
    if N == 0:
        return [zero_cochain(module, n)]
    U, sigma, Uinv = _kernel_lattice(module, n)
    rel = _relations(module, n)
    gens = set()
    for i in range(N):
        v = tuple(Uinv[a][i] * sigma[i] % rel[a] for a in range(N))
        if any(v):
            gens.add(v)
    gens = sorted(gens)
    seen = {(0,) * N}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % r for a, b, r in zip(v, g, rel))
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise BoundExceeded(f"more than {cap} closed cochains")
                    nxt.append(w)
        frontier = nxt
    return [cochain_from_vector(module, n, v) for v in sorted(seen)]


def cochain_count(module, n):
    return module.coeffs.order ** ((module.group.order - 1) ** n)


def cocycle_count(module, n):
    """|Z^n| from |Z^n| = |H^n| |C^(n-1)| / |Z^(n-1)|, without enumeration."""
    out = cohomology_group(module, 0).order
    for j in range(1, n + 1):
        out = cohomology_group(module, j).order * cochain_count(module, j - 1) // out
    return out
