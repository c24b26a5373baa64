"""Weyl group elements as integer matrices acting on the root lattice."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .rootsys import CartanType, RootDatum, build_root_system


class WeylError(ValueError):
    pass


def _matmul(A, B):
    n = len(A)
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _apply(M, v):
    return tuple(sum(M[i][k] * v[k] for k in range(len(v))) for i in range(len(M)))


@dataclass(frozen=True)
class WeylElt:
    """A Weyl group element; ``matrix[i][j]`` is the alpha_i-coefficient of w(alpha_j)."""

    cartan_type: CartanType
    matrix: tuple[tuple[int, ...], ...]

    @property
    def datum(self) -> RootDatum:
        return build_root_system(self.cartan_type)

    @cached_property
    def key(self) -> tuple[int, ...]:
        return tuple(x for row in self.matrix for x in row)

    def __mul__(self, other: WeylElt) -> WeylElt:
        if not isinstance(other, WeylElt):
            return NotImplemented
        return multiply(self, other)

    def __lt__(self, other: WeylElt) -> bool:
        return (self.length, self.key) < (other.length, other.key)

    def act_root(self, r) -> tuple:
        return _apply(self.matrix, r)

    def act_weight(self, x) -> tuple[Fraction, ...]:
        """Action on a weight given in the fundamental-weight basis."""
        d = self.datum
        return d.root_to_weight(self.act_root(d.weight_to_root(x)))

    def act_coweight(self, h) -> tuple:
        """Action on a coweight given in the simple-coroot basis."""
        d = self.datum
        # h = sum h_j alpha_j^vee = sum h_j (2/|alpha_j|^2) alpha_j under the form
        as_root = [Fraction(h[j]) * 2 / d.gram[j][j] for j in range(d.rank)]
        img = self.act_root(as_root)
        return tuple(img[j] * d.gram[j][j] / 2 for j in range(d.rank))

    @cached_property
    def inversions(self) -> frozenset:
        out = []
        for r in self.datum.positive_roots:
            img = self.act_root(r)
            if any(x < 0 for x in img):
                out.append(r)
        return frozenset(out)

    @cached_property
    def length(self) -> int:
        return len(self.inversions)

    def has_right_descent(self, i: int) -> bool:
        return any(self.matrix[k][i] < 0 for k in range(len(self.matrix)))

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """Reduced word (0-based simple indices) with w = s_{w[0]} ... s_{w[-1]}."""
        word = []
        w = self
        n = len(self.matrix)
        while True:
            i = next((i for i in range(n) if w.has_right_descent(i)), None)
            if i is None:
                break
            word.append(i)
            w = w * simple_reflection(self.cartan_type, i)
        return tuple(reversed(word))

    @cached_property
    def inverse(self) -> WeylElt:
        w = identity(self.cartan_type)
        for i in reversed(self.reduced_word):
            w = w * simple_reflection(self.cartan_type, i)
        return w

    def __repr__(self):
        word = "".join(f"s{i + 1}" for i in self.reduced_word) or "e"
        return f"<{self.cartan_type}:{word}>"


def multiply(u: WeylElt, v: WeylElt) -> WeylElt:
    if u.cartan_type != v.cartan_type:
        raise WeylError("elements of different Weyl groups")
    return WeylElt(u.cartan_type, _matmul(u.matrix, v.matrix))


@lru_cache(maxsize=None)
def identity(ct: CartanType) -> WeylElt:
    n = ct.rank
    return WeylElt(ct, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


@lru_cache(maxsize=None)
def simple_reflection(ct: CartanType, i: int) -> WeylElt:
    d = build_root_system(ct)
    n = d.rank
    cols = [d.reflect_root(i, d.simple_roots[j]) for j in range(n)]
    return WeylElt(ct, tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))


def from_word(ct: CartanType, word) -> WeylElt:
    w = identity(ct)
    for i in word:
        w = w * simple_reflection(ct, i)
    return w


def inversion_set(w: WeylElt) -> frozenset:
    """{alpha > 0 : w(alpha) < 0}."""
    return w.inversions


@dataclass(eq=False)
class WeylGroup:
    """Fully enumerated Weyl group, ordered by (length, matrix)."""

    datum: RootDatum
    elements: list[WeylElt] = field(default_factory=list)

    def __post_init__(self):
        ct = self.datum.cartan_type
        gens = [simple_reflection(ct, i) for i in range(self.datum.rank)]
        e = identity(ct)
        seen = {e}
        layer = [e]
        out = [e]
        while layer:
            nxt = []
            for w in layer:
                for s in gens:
                    if w.has_right_descent(gens.index(s)):
                        continue
                    ws = w * s
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            out.extend(nxt)
            layer = nxt
        self.elements = sorted(out)
        self.index = {w: k for k, w in enumerate(self.elements)}
        if len(self.elements) != self.datum.weyl_order:
            raise WeylError("Weyl group enumeration mismatch")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def cartan_type(self) -> CartanType:
        return self.datum.cartan_type

    def s(self, i: int) -> WeylElt:
        return simple_reflection(self.cartan_type, i)

    @property
    def e(self) -> WeylElt:
        return identity(self.cartan_type)

    @cached_property
    def w0(self) -> WeylElt:
        return self.elements[-1]

    def of_word(self, word) -> WeylElt:
        return from_word(self.cartan_type, word)

    @cached_property
    def lengths(self) -> list[int]:
        return [w.length for w in self.elements]

    @cached_property
    def right_mult(self) -> list[list[int]]:
        """right_mult[i][k] = index of elements[k] * s_i."""
        return [[self.index[w * self.s(i)] for w in self.elements] for i in range(self.datum.rank)]

    @cached_property
    def left_mult(self) -> list[list[int]]:
        """left_mult[i][k] = index of s_i * elements[k]."""
        return [[self.index[self.s(i) * w] for w in self.elements] for i in range(self.datum.rank)]


@lru_cache(maxsize=None)
def weyl_group(ct: CartanType) -> WeylGroup:
    return WeylGroup(build_root_system(ct))


def _levi_ok(w: WeylElt, delta_p) -> bool:
    return all(not w.has_right_descent(i) for i in delta_p)


@lru_cache(maxsize=None)
def _min_coset_reps(ct: CartanType, delta_p: frozenset) -> tuple[WeylElt, ...]:
    return tuple(w for w in weyl_group(ct) if _levi_ok(w, delta_p))


def min_coset_reps(datum: RootDatum, delta_p) -> list[WeylElt]:
    """W^P: the w with w(alpha) > 0 for every alpha in Delta_P, sorted by (length, matrix)."""
    delta_p = frozenset(delta_p)
    if not delta_p <= set(range(datum.rank)):
        raise WeylError(f"bad parabolic {sorted(delta_p)}")
    return list(_min_coset_reps(datum.cartan_type, delta_p))


@lru_cache(maxsize=None)
def _longest(ct: CartanType, delta_p: frozenset) -> WeylElt:
    w = identity(ct)
    # grow by any ascent inside W_P until none is left
    while True:
        i = next((i for i in sorted(delta_p) if not w.has_right_descent(i)), None)
        if i is None:
            return w
        w = w * simple_reflection(ct, i)


def longest_element(datum: RootDatum, delta_p=None) -> WeylElt:
    """Longest element of W_P (of W when ``delta_p`` is None)."""
    if delta_p is None:
        delta_p = range(datum.rank)
    return _longest(datum.cartan_type, frozenset(delta_p))
