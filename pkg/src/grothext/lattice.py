"""Exact integer linear algebra.

Matrices are plain lists of row lists of Python ints, so nothing overflows.
Lattices are integer row spans; quotients of Z^n by a lattice are reported as
finitely generated abelian groups (free rank plus invariant factors).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

Matrix = list[list[int]]
Vector = tuple[int, ...]

DEFAULT_MAX_ORDER = 10**4


class UnsupportedSize(ValueError):
    """Raised when a group is infinite or larger than the enumeration bound."""


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for row in a]


def vecmat(v: Sequence[int], m: Sequence[Sequence[int]], cols: int) -> Vector:
    out = [0] * cols
    for x, row in zip(v, m):
        if x:
            for j in range(cols):
                out[j] += x * row[j]
    return tuple(out)


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _hnf_with_transform(rows: Sequence[Sequence[int]], ncols: int):
    """Row HNF of ``rows``; returns (H, U, pivots) with U unimodular and
    U @ rows == H padded with zero rows."""
    a = [list(r) for r in rows]
    m = len(a)
    u = identity(m)
    pivots: list[int] = []
    p = 0
    for j in range(ncols):
        if p == m:
            break
        for i in range(p + 1, m):
            b = a[i][j]
            if b == 0:
                continue
            c = a[p][j]
            g, x, y = xgcd(c, b)
            s, t = c // g, b // g
            for mat in (a, u):
                rp, ri = mat[p], mat[i]
                mat[p] = [x * e + y * f for e, f in zip(rp, ri)]
                mat[i] = [-t * e + s * f for e, f in zip(rp, ri)]
        piv = a[p][j]
        if piv == 0:
            continue
        if piv < 0:
            a[p] = [-e for e in a[p]]
            u[p] = [-e for e in u[p]]
            piv = -piv
        for i in range(p):
            q = a[i][j] // piv
            if q:
                a[i] = [e - q * f for e, f in zip(a[i], a[p])]
                u[i] = [e - q * f for e, f in zip(u[i], u[p])]
        pivots.append(j)
        p += 1
    return a[:p], u, pivots


def hnf(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Canonical row Hermite normal form with zero rows removed.

    Pivots are positive and every entry above a pivot lies in [0, pivot).
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return _hnf_with_transform(m, ncols)[0]


def snf(m: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Smith normal form: returns (U, D, V) with U @ m @ V == D.

    D is diagonal with non-negative entries and d_i | d_{i+1}; U and V are
    unimodular.
    """
    return _snf(m, ncols)[:3]


def _snf(m, ncols=None):
    rows = len(m)
    cols = ncols if ncols is not None else (len(m[0]) if m else 0)
    d = [list(r) for r in m]
    u = identity(rows)
    v = identity(cols)
    vinv = identity(cols)

    def swap_rows(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for mat in (d, v):
            for r in mat:
                r[j], r[k] = r[k], r[j]
        vinv[j], vinv[k] = vinv[k], vinv[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        d[dst] = [e + q * f for e, f in zip(d[dst], d[src])]
        u[dst] = [e + q * f for e, f in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for mat in (d, v):
            for r in mat:
                r[dst] += q * r[src]
        vinv[src] = [e - q * f for e, f in zip(vinv[src], vinv[dst])]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = d[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return u, d, v, vinv
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            piv = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = d[i][t] // piv
                if q:
                    add_row(i, t, -q)
                dirty = dirty or d[i][t] != 0
            for j in range(t + 1, cols):
                q = d[t][j] // piv
                if q:
                    add_col(j, t, -q)
                dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if d[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if d[t][t] < 0:
            d[t] = [-e for e in d[t]]
            u[t] = [-e for e in u[t]]
    return u, d, v, vinv


class IntLattice:
    """Integer row span of a list of generators in Z^n.

    The canonical HNF basis is kept together with the transform back to the
    original generators, so :meth:`solve` can return coefficients over the
    rows the lattice was built from.
    """

    __slots__ = ("dim", "generators", "basis", "pivots", "_to_gens")

    def __init__(self, dim: int, generators: Sequence[Sequence[int]] = ()):
        gens = [tuple(int(x) for x in g) for g in generators]
        for g in gens:
            if len(g) != dim:
                raise ValueError(f"generator {g} has length {len(g)}, expected {dim}")
        self.dim = dim
        self.generators: tuple[Vector, ...] = tuple(gens)
        h, u, pivots = _hnf_with_transform(gens, dim)
        self.basis: tuple[Vector, ...] = tuple(tuple(r) for r in h)
        self.pivots = tuple(pivots)
        self._to_gens = u[: len(h)]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _check(self, v):
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.dim}")

    def _coords(self, v) -> Optional[list[int]]:
        """Coefficients of v over the HNF basis, or None if v is not in the lattice."""
        self._check(v)
        rest = list(v)
        coords = []
        for row, j in zip(self.basis, self.pivots):
            if any(rest[:j]):
                return None
            q, r = divmod(rest[j], row[j])
            if r:
                return None
            coords.append(q)
            if q:
                rest = [e - q * f for e, f in zip(rest, row)]
        return None if any(rest) else coords

    def __contains__(self, v) -> bool:
        return self._coords(v) is not None

    def solve(self, v) -> Optional[list[int]]:
        x = self._coords(v)
        if x is None:
            return None
        n = len(self.generators)
        return [sum(x[k] * self._to_gens[k][i] for k in range(len(x))) for i in range(n)]

    def __eq__(self, other):
        if not isinstance(other, IntLattice):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("lattices live in different ambient dimensions")
        return self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __add__(self, other: IntLattice) -> IntLattice:
        if self.dim != other.dim:
            raise ValueError("lattices live in different ambient dimensions")
        return IntLattice(self.dim, self.generators + other.generators)

    def contains_lattice(self, other: IntLattice) -> bool:
        return all(b in self for b in other.basis)

    def __repr__(self):
        return f"IntLattice(dim={self.dim}, basis={list(self.basis)})"


def member(lattice: IntLattice, v: Sequence[int]) -> bool:
    return v in lattice


def lattice_equal(l1: IntLattice, l2: IntLattice) -> bool:
    return l1 == l2


def solve(lattice: IntLattice, v: Sequence[int]) -> Optional[list[int]]:
    return lattice.solve(v)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^n / L presented as Z/d_1 + ... + Z/d_k + Z^free_rank.

    ``projection`` is an n x (k + free_rank) matrix: an ambient vector v maps
    to v @ projection, with the first k coordinates read modulo the d_i.
    ``lift`` maps group coordinates back to an ambient preimage.
    """

    ambient_dim: int
    free_rank: int
    torsion: tuple[int, ...]
    projection: tuple[Vector, ...]
    lift: tuple[Vector, ...]

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        return prod(self.torsion) if self.free_rank == 0 else None

    def project(self, v: Sequence[int]) -> Vector:
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        y = vecmat(v, self.projection, self.ngens)
        k = len(self.torsion)
        return tuple(e % d for e, d in zip(y[:k], self.torsion)) + y[k:]

    def add(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        k = len(self.torsion)
        s = [a + b for a, b in zip(x, y)]
        return tuple(e % d for e, d in zip(s[:k], self.torsion)) + tuple(s[k:])

    def zero(self) -> Vector:
        return (0,) * self.ngens

    def elements(self):
        """Iterate over all elements of a finite group in lexicographic order."""
        if not self.is_finite:
            raise UnsupportedSize("group is infinite")
        return itertools.product(*(range(d) for d in self.torsion))

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def quotient(ambient_dim: int, lattice: IntLattice) -> AbelianGroup:
    """Structure of Z^ambient_dim / lattice."""
    if lattice.dim != ambient_dim:
        raise ValueError("lattice lives in a different ambient dimension")
    gens = [list(b) for b in lattice.basis]
    _, d, v, vinv = _snf(gens, ambient_dim)
    r = len(gens)
    factors = [d[i][i] for i in range(r)]
    keep = [i for i in range(r) if factors[i] != 1] + list(range(r, ambient_dim))
    projection = tuple(tuple(v[row][i] for i in keep) for row in range(ambient_dim))
    lift = tuple(tuple(vinv[i]) for i in keep)
    torsion = tuple(factors[i] for i in range(r) if factors[i] != 1)
    return AbelianGroup(ambient_dim, ambient_dim - r, torsion, projection, lift)


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def enumerate_subgroups(group: AbelianGroup, bound: int = DEFAULT_MAX_ORDER) -> list[IntLattice]:
    """All subgroups of a finite group, as lattices between diag(torsion) and Z^k.

    Each subgroup H corresponds to the lattice of torsion coordinate vectors
    whose class lies in H. Ordered by subgroup order, then by HNF basis.
    """
    if not group.is_finite:
        raise UnsupportedSize(f"group {group.describe()} is infinite; bound is {bound}")
    if group.order > bound:
        raise UnsupportedSize(f"group order {group.order} exceeds the bound {bound}")
    ds = group.torsion
    k = len(ds)
    relations = [tuple(d if i == j else 0 for j in range(k)) for i, d in enumerate(ds)]
    found: list[tuple[int, tuple, IntLattice]] = []

    # Candidate HNF rows: pivot h_i divides d_i, entries right of the pivot
    # in column j range over [0, h_j).
    def build(i, diag, acc):
        if i == k:
            lat = IntLattice(k, acc)
            if all(r in lat for r in relations):
                order = prod(ds) // prod(diag) if k else 1
                found.append((order, lat.basis, lat))
            return
        h = diag[i]
        spans = [range(diag[j]) for j in range(i + 1, k)]
        for tail in itertools.product(*spans):
            row = (0,) * i + (h,) + tail
            build(i + 1, diag, acc + [row])

    for diag in itertools.product(*(_divisors(d) for d in ds)):
        build(0, diag, [])
    found.sort(key=lambda t: (t[0], t[1]))
    return [t[2] for t in found]
