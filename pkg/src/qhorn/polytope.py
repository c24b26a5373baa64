"""Exact H/V conversion for bounded rational polytopes.

``facets`` removes redundant rows with exact LPs; ``vertices`` runs the
double-description method on the homogenised cone; ``brute_force_vertices``
is the subset-solve oracle used to check it on small systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .linalg import rank, rref, solve
from .lp import maximize


class PolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class HRep:
    """Rows (a, b) encoding a.x <= b."""

    rows: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    @classmethod
    def from_rows(cls, rows) -> HRep:
        rows = tuple(
            (tuple(Fraction(x) for x in a), Fraction(b)) for a, b in rows
        )
        if rows and len({len(a) for a, _ in rows}) != 1:
            raise PolytopeError("inconsistent row lengths")
        return cls(rows)

    @property
    def dim(self) -> int:
        return len(self.rows[0][0]) if self.rows else 0

    def __len__(self):
        return len(self.rows)

    def contains(self, x) -> bool:
        return all(_dot(a, x) <= b for a, b in self.rows)


@dataclass(frozen=True)
class VRep:
    points: tuple[tuple[Fraction, ...], ...]

    def __len__(self):
        return len(self.points)

    def as_set(self) -> frozenset:
        return frozenset(self.points)


def _dot(a, x) -> Fraction:
    return sum((p * q for p, q in zip(a, x)), Fraction(0))


def _primitive(v) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def normalized_row(a, b) -> tuple[int, ...]:
    return _primitive(list(a) + [b])


def interior_point(h: HRep):
    """A point strictly inside every row, or None when the region is not full-dimensional."""
    n = h.dim
    A = [list(a) + [Fraction(1)] for a, _ in h.rows]
    b = [bb for _, bb in h.rows]
    # cap the slack so the LP stays bounded
    A.append([Fraction(0)] * n + [Fraction(1)])
    b.append(Fraction(1))
    res = maximize([0] * n + [1], A, b)
    if res.status != "optimal" or res.value <= 0:
        return None
    return res.x[:n]


def facets(h: HRep) -> HRep:
    """Irredundant sub-list of rows defining the same polytope (first copy of duplicates kept)."""
    x0 = interior_point(h)
    if x0 is None:
        raise PolytopeError("region is empty or not full-dimensional")
    # translate so the interior point is the origin: every rhs becomes positive
    rows = []
    seen = set()
    for a, b in h.rows:
        key = normalized_row(a, b)
        if key in seen:
            continue
        seen.add(key)
        rows.append((a, b, b - _dot(a, x0)))
    keep = []
    for i, (a, b, bt) in enumerate(rows):
        A = [r[0] for j, r in enumerate(rows) if j != i] + [a]
        rhs = [r[2] for j, r in enumerate(rows) if j != i] + [bt + 1]
        res = maximize(a, A, rhs)
        if res.status != "optimal":
            raise PolytopeError("unexpected LP status " + res.status)
        if res.value > bt:
            keep.append((a, b))
    return HRep(tuple(keep))


def _initial_basis(M, d):
    """Indices of d linearly independent rows of M."""
    chosen = []
    current = []
    for i, row in enumerate(M):
        if rank(current + [row]) > len(current):
            current.append(row)
            chosen.append(i)
            if len(chosen) == d:
                return chosen
    raise PolytopeError("cone has a lineality space (region unbounded or not full rank)")


def _inverse_columns(rows):
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    R, _ = rref(aug)
    return [[R[i][n + j] for i in range(n)] for j in range(n)]


def double_description(M) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {y : M y >= 0}; rows inserted in index order."""
    M = [_primitive(r) for r in M]
    d = len(M[0])
    base = _initial_basis(M, d)
    inv = _inverse_columns([M[i] for i in base])
    rays = [_primitive(col) for col in inv]

    def zeros(r, rows):
        z = 0
        for k in rows:
            if sum(a * b for a, b in zip(M[k], r)) == 0:
                z |= 1 << k
        return z

    processed = list(base)
    zs = [zeros(r, processed) for r in rays]
    for k in range(len(M)):
        if k in base:
            continue
        row = M[k]
        vals = [sum(a * b for a, b in zip(row, r)) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays, new_zs = [], []
        bit = 1 << k
        for i in pos + zer:
            new_rays.append(rays[i])
            new_zs.append(zs[i] | (bit if vals[i] == 0 else 0))
        for i in pos:
            for j in neg:
                common = zs[i] & zs[j]
                if bin(common).count("1") < d - 2:
                    continue
                # combinatorial adjacency: no third ray vanishes on all common rows
                if any(
                    (zs[t] & common) == common for t in range(len(rays)) if t != i and t != j
                ):
                    continue
                vi, vj = vals[i], -vals[j]
                r = _primitive([vj * a + vi * b for a, b in zip(rays[i], rays[j])])
                new_rays.append(r)
                new_zs.append(common | bit)
        rays, zs = new_rays, new_zs
        processed.append(k)
    return rays


def vertices(h: HRep) -> VRep:
    """Vertices of a bounded H-polytope via the homogenised cone."""
    n = h.dim
    # y = (x, s): b s - a.x >= 0, s >= 0
    M = [[-x for x in a] + [b] for a, b in h.rows]
    M.append([Fraction(0)] * n + [Fraction(1)])
    rays = double_description(M)
    pts = set()
    for r in rays:
        if r[-1] == 0:
            raise PolytopeError("unbounded region: a recession ray survives")
        s = Fraction(r[-1])
        pts.add(tuple(Fraction(x) / s for x in r[:-1]))
    return VRep(tuple(sorted(pts)))


def brute_force_vertices(h: HRep) -> VRep:
    """Solve every n-subset of rows; keep feasible unique solutions."""
    n = h.dim
    pts = set()
    for idx in combinations(range(len(h.rows)), n):
        A = [list(h.rows[i][0]) for i in idx]
        if rank(A) < n:
            continue
        x = solve(A, [h.rows[i][1] for i in idx])
        if x is not None and h.contains(x):
            pts.add(tuple(x))
    return VRep(tuple(sorted(pts)))


def verify(h: HRep, v: VRep) -> bool:
    """Every vertex satisfies every row and every row is tight on dim affinely independent vertices."""
    n = h.dim
    if len(set(v.points)) != len(v.points):
        return False
    for a, b in h.rows:
        tight = []
        for p in v.points:
            val = _dot(a, p)
            if val > b:
                return False
            if val == b:
                tight.append(list(p) + [Fraction(1)])
        if rank(tight) < n:
            return False
    return True
