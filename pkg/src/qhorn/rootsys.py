"""Exact root-system data for the simple types A-G.

Conventions (used everywhere downstream):

* roots are integer vectors in the simple-root basis,
* weights are rational vectors in the fundamental-weight basis,
* coweights are rational vectors in the simple-coroot basis,

so that the weight/coweight pairing is a plain dot product.  The Cartan
matrix is stored as ``C[i][j] = <alpha_j, alpha_i^vee>`` (Bourbaki numbering)
and the invariant form is normalised by ``(theta, theta) = 2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial

Vec = tuple  # tuple of int / Fraction


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": 6 <= n <= 8,
            "F": n == 4,
            "G": n == 2,
        }.get(f)
        if not ok:
            raise RootSystemError(f"invalid Cartan type {f}{n}")

    def __str__(self):
        return f"{self.family}{self.rank}"


_ALIASES = [
    (re.compile(r"^(?:SP|SP\()(\d+)\)?$"), lambda m: ("C", _half(int(m.group(1))))),
    (re.compile(r"^(?:SPIN|SPIN\()(\d+)\)?$"), lambda m: _spin(int(m.group(1)))),
    (re.compile(r"^(?:SU|SU\()(\d+)\)?$"), lambda m: ("A", int(m.group(1)) - 1)),
    (re.compile(r"^([A-G])_?(\d+)$"), lambda m: (m.group(1), int(m.group(2)))),
]


def _half(n: int) -> int:
    if n % 2:
        raise RootSystemError(f"Sp({n}) needs an even argument")
    return n // 2


def _spin(n: int) -> tuple[str, int]:
    if n % 2:
        return "B", (n - 1) // 2
    return "D", n // 2


def parse_group(name: str) -> CartanType:
    """Resolve ``"G2"``, ``"B_3"``, ``"Sp(4)"``, ``"Spin(7)"``, ``"Sp4"`` ... to a CartanType."""
    key = name.strip().upper().replace(" ", "")
    for pattern, make in _ALIASES:
        m = pattern.match(key)
        if m:
            family, rank = make(m)
            return CartanType(family, rank)
    raise RootSystemError(f"unknown group {name!r}")


def group_label(ct: CartanType) -> str:
    """Row label in the Sp/Spin naming used for the classical groups."""
    if ct.family == "C":
        return f"Sp({2 * ct.rank})"
    if ct.family == "B":
        return f"Spin({2 * ct.rank + 1})"
    if ct.family == "D":
        return f"Spin({2 * ct.rank})"
    return f"{ct.family}{ct.rank}"


def _e(n: int, *pairs) -> tuple:
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def _simple_root_vectors(ct: CartanType) -> list[tuple]:
    """Simple roots in a Euclidean model (Bourbaki, Planches I-IX)."""
    f, n = ct.family, ct.rank
    if f == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if f == "B":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 1))]
    if f == "C":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 2))]
    if f == "D":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [
            _e(n, (n - 2, 1), (n - 1, 1))
        ]
    if f == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    if f == "F":
        h = Fraction(1, 2)
        return [
            _e(4, (1, 1), (2, -1)),
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1)),
            _e(4, (0, h), (1, -h), (2, -h), (3, -h)),
        ]
    if f == "E":
        h = Fraction(1, 2)
        e8 = [
            _e(8, (0, h), (7, h), *[(k, -h) for k in range(1, 7)]),
            _e(8, (0, 1), (1, 1)),
            _e(8, (0, -1), (1, 1)),
            _e(8, (1, -1), (2, 1)),
            _e(8, (2, -1), (3, 1)),
            _e(8, (3, -1), (4, 1)),
            _e(8, (4, -1), (5, 1)),
            _e(8, (5, -1), (6, 1)),
        ]
        return e8[:n]
    raise RootSystemError(str(ct))


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Immutable root-system data of one simple type."""

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    _root_index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @cached_property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=sum)

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(1) for _ in range(self.rank))

    @cached_property
    def weyl_order(self) -> int:
        # product of (exponent + 1) = product of degrees
        return _weyl_order(self.cartan_type)

    @cached_property
    def root_norms(self) -> dict:
        return {a: self.form_roots(a, a) for a in self.positive_roots}

    @cached_property
    def simple_norms(self) -> tuple[Fraction, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return inverse_matrix([[Fraction(x) for x in row] for row in self.cartan_matrix])

    def is_root(self, r) -> bool:
        r = tuple(r)
        return r in self._root_index or tuple(-x for x in r) in self._root_index

    def is_positive_root(self, r) -> bool:
        return tuple(r) in self._root_index

    def root_index(self, r) -> int:
        return self._root_index[tuple(r)]

    def form_roots(self, a, b) -> Fraction:
        """Invariant form (a, b) of two vectors in the simple-root basis."""
        n = self.rank
        return sum(
            (a[i] * b[j] * self.gram[i][j] for i in range(n) for j in range(n) if a[i] and b[j]),
            Fraction(0),
        )

    def form_weights(self, x, y) -> Fraction:
        return self.form_roots(self.weight_to_root(x), self.weight_to_root(y))

    def root_to_weight(self, r) -> tuple:
        """alpha_j maps to column j of the Cartan matrix."""
        C = self.cartan_matrix
        n = self.rank
        return tuple(sum(C[i][j] * r[j] for j in range(n)) for i in range(n))

    def weight_to_root(self, x) -> tuple[Fraction, ...]:
        Ci = self.cartan_inverse
        n = self.rank
        return tuple(sum((Ci[i][j] * x[j] for j in range(n)), Fraction(0)) for i in range(n))

    def coroot(self, r) -> tuple[int, ...]:
        """Coroot of ``r`` in the simple-coroot basis."""
        r = tuple(r)
        if not self.is_root(r):
            raise RootSystemError(f"{r} is not a root")
        norm = self.form_roots(r, r)
        out = []
        for j, c in enumerate(r):
            v = Fraction(c) * self.gram[j][j] / norm
            if v.denominator != 1:
                raise RootSystemError(f"non-integral coroot for {r}")
            out.append(int(v))
        return tuple(out)

    def pair_root_coroot(self, r, h) -> Fraction:
        """<r, h> for a root-basis vector ``r`` and a coroot-basis vector ``h``."""
        return pairing(self.root_to_weight(r), h)

    def coweight_to_weight(self, h) -> tuple[Fraction, ...]:
        """The identification X_*(T)_R -> X^*(T)_R given by the invariant form."""
        # alpha^vee corresponds to 2 alpha / (alpha, alpha)
        root = tuple(Fraction(2) * h[j] / self.gram[j][j] for j in range(self.rank))
        return self.root_to_weight(root)

    def reflect_root(self, i: int, r) -> tuple:
        c = sum(self.cartan_matrix[i][j] * r[j] for j in range(self.rank))
        out = list(r)
        out[i] -= c
        return tuple(out)


def pairing(weight, coweight) -> Fraction:
    """<lambda, h> for lambda in the fundamental-weight basis and h in the coroot basis."""
    if len(weight) != len(coweight):
        raise RootSystemError("rank mismatch")
    return sum((Fraction(a) * b for a, b in zip(weight, coweight)), Fraction(0))


def inverse_matrix(M):
    """Exact inverse of a square rational matrix."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise RootSystemError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(tuple(row[n:]) for row in A)


_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def _weyl_order(ct: CartanType) -> int:
    f, n = ct.family, ct.rank
    if f == "A":
        return factorial(n + 1)
    if f in "BC":
        return 2**n * factorial(n)
    if f == "D":
        return 2 ** (n - 1) * factorial(n)
    out = 1
    for d in _DEGREES[str(ct)]:
        out *= d
    return out


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootDatum:
    """Build the RootDatum of ``ct``; positive roots by reflection closure."""
    if isinstance(ct, str):
        ct = parse_group(ct)
    vecs = _simple_root_vectors(ct)
    n = ct.rank
    raw = [[_dot(vecs[i], vecs[j]) for j in range(n)] for i in range(n)]
    cartan = tuple(
        tuple(int(2 * raw[j][i] / raw[i][i]) for j in range(n)) for i in range(n)
    )

    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * r[j] for j in range(n))
                if c >= 0:
                    continue
                s = list(r)
                s[i] -= c
                s = tuple(s)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    positive = tuple(sorted(found, key=lambda r: (sum(r), tuple(-x for x in r))))

    theta = max(positive, key=sum)
    theta_norm = sum(theta[i] * theta[j] * raw[i][j] for i in range(n) for j in range(n))
    scale = Fraction(2) / theta_norm
    gram = tuple(tuple(raw[i][j] * scale for j in range(n)) for i in range(n))
    return RootDatum(
        cartan_type=ct,
        cartan_matrix=cartan,
        gram=gram,
        positive_roots=positive,
        _root_index={r: k for k, r in enumerate(positive)},
    )


def fundamental_weight_as_roots(datum: RootDatum, i: int) -> tuple[Fraction, ...]:
    """varpi_i expanded in the simple-root basis (row i of the inverse Cartan matrix, transposed)."""
    e = tuple(Fraction(int(k == i)) for k in range(datum.rank))
    return datum.weight_to_root(e)
