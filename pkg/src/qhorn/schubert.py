"""Classical Schubert calculus on G/B and G/P.

Internally ``S_w`` is the Schubert class of codegree ``l(w)`` (the class whose
BGG polynomial is ``schubert_polynomial(w)``).  The indexing used for the Horn
inequalities, ``sigma_w`` of codegree ``dim(G/P) - l(w)``, is ``S_{w0 w w_{0,P}}``;
see :meth:`ParabolicDatum.dual`.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cached_property, lru_cache

from .linalg import rref
from .parabolic import ParabolicDatum, ParabolicError, chi_counts
from .rootsys import CartanType, RootDatum, build_root_system
from .weyl import WeylElt, WeylGroup, weyl_group


class SchubertError(ArithmeticError):
    pass


def reflection(ct: CartanType, root) -> WeylElt:
    """s_gamma for an arbitrary root gamma (simple-root coordinates)."""
    d = build_root_system(ct)
    n = d.rank
    cv = d.coroot(root)
    cols = []
    for j in range(n):
        c = sum(cv[i] * d.cartan_matrix[i][j] for i in range(n))
        col = [int(k == j) - c * root[k] for k in range(n)]
        cols.append(col)
    return WeylElt(ct, tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))


# -- coinvariant algebra (BGG) ----------------------------------------------


class Poly:
    """Polynomial with Fraction coefficients: {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, nvars: int, c) -> Poly:
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def linear(cls, coeffs) -> Poly:
        n = len(coeffs)
        return cls(n, {tuple(int(k == i) for k in range(n)): Fraction(c) for i, c in enumerate(coeffs)})

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(self.nvars, out)

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly(self.nvars, {k: v * c for k, v in self.terms.items()})
        out = defaultdict(Fraction)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += v1 * v2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items(), reverse=True):
            mon = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(k) if e)
            parts.append(f"{v}*{mon}" if mon else str(v))
        return " + ".join(parts)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def homogeneous_parts(self) -> dict:
        out = defaultdict(dict)
        for k, v in self.terms.items():
            out[sum(k)][k] = v
        return {d: Poly(self.nvars, t) for d, t in out.items()}

    def constant(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def substitute_linear(self, j: int, lin: Poly) -> Poly:
        """Replace x_j by the linear polynomial ``lin``."""
        powers = [Poly.const(self.nvars, 1)]
        out = Poly(self.nvars)
        for k, v in self.terms.items():
            e = k[j]
            while len(powers) <= e:
                powers.append(powers[-1] * lin)
            rest = list(k)
            rest[j] = 0
            out = out + powers[e] * Poly(self.nvars, {tuple(rest): v})
        return out

    def divide_linear(self, lin: Poly, j: int) -> Poly:
        """Exact quotient by a linear form whose x_j coefficient is nonzero."""
        unit = tuple(int(k == j) for k in range(self.nvars))
        lead = lin.terms[unit]
        rem = dict(self.terms)
        quot = {}
        while rem:
            # largest x_j degree first, then eliminate
            k = max(rem, key=lambda m: (m[j], m))
            v = rem.pop(k)
            if k[j] == 0:
                raise SchubertError("inexact division in divided difference")
            qk = tuple(a - b for a, b in zip(k, unit))
            qv = v / lead
            quot[qk] = quot.get(qk, 0) + qv
            for m, c in lin.terms.items():
                if m == unit:
                    continue
                key = tuple(a + b for a, b in zip(qk, m))
                rem[key] = rem.get(key, 0) - qv * c
                if not rem[key]:
                    del rem[key]
        return Poly(self.nvars, quot)


class Coinvariants:
    """Polynomials on the Cartan algebra; generator ``x_i`` is the linear form varpi_i."""

    def __init__(self, ct: CartanType):
        self.cartan_type = ct
        self.datum = build_root_system(ct)
        self.group = weyl_group(ct)
        n = self.datum.rank
        C = self.datum.cartan_matrix
        self.alpha = [Poly.linear([C[k][j] for k in range(n)]) for j in range(n)]
        # s_j(x_j) = x_j - alpha_j
        self._image = [Poly.linear([int(k == j) for k in range(n)]) - self.alpha[j] for j in range(n)]

    def const(self, c) -> Poly:
        return Poly.const(self.datum.rank, c)

    def linear(self, weight) -> Poly:
        """The linear form of a weight given in the fundamental-weight basis."""
        return Poly.linear(weight)

    def root(self, r) -> Poly:
        return self.linear(self.datum.root_to_weight(r))

    def reflect(self, j: int, f: Poly) -> Poly:
        return f.substitute_linear(j, self._image[j])

    def divided_difference(self, j: int, f: Poly) -> Poly:
        """(f - s_j f) / alpha_j."""
        num = f - self.reflect(j, f)
        if num.is_zero:
            return Poly(self.datum.rank)
        return num.divide_linear(self.alpha[j], j)

    @cached_property
    def top(self) -> Poly:
        f = self.const(Fraction(1, self.datum.weyl_order))
        for r in self.datum.positive_roots:
            f = f * self.root(r)
        return f

    @cached_property
    def _schubert(self) -> dict:
        # S_{w s_i} = d_i S_w whenever l(w s_i) < l(w); start from w0
        out = {self.group.w0: self.top}
        for w in reversed(self.group.elements):
            if w in out:
                continue
            i = next(i for i in range(self.datum.rank) if not w.has_right_descent(i))
            out[w] = self.divided_difference(i, out[w * self.group.s(i)])
        return out

    def schubert_polynomial(self, w: WeylElt) -> Poly:
        return self._schubert[w]

    def expand(self, f: Poly) -> dict:
        """Schubert-basis coefficients of f modulo the positive-degree invariants."""
        G = self.group
        L = G.lengths
        top = L[-1]
        out = {}
        for k, comp in f.homogeneous_parts().items():
            if k > top:
                continue
            # D[w] = d_w comp with d_w = d_i d_{s_i w} for a left descent i
            D = {0: comp}
            for idx, w in enumerate(G.elements):
                if L[idx] == 0 or L[idx] > k:
                    continue
                i = next(i for i in range(self.datum.rank) if L[G.left_mult[i][idx]] < L[idx])
                prev = D[G.left_mult[i][idx]]
                D[idx] = prev if prev.is_zero else self.divided_difference(i, prev)
            for idx, g in D.items():
                if L[idx] == k and not g.is_zero:
                    out[G.elements[idx]] = g.constant()
        return out


@lru_cache(maxsize=None)
def coinvariants(ct: CartanType) -> Coinvariants:
    return Coinvariants(ct)


def divided_difference(ct: CartanType, j: int, f: Poly) -> Poly:
    return coinvariants(ct).divided_difference(j, f)


def schubert_polynomial(w: WeylElt) -> Poly:
    return coinvariants(w.cartan_type).schubert_polynomial(w)


def expand(ct: CartanType, f) -> dict:
    return coinvariants(ct).expand(f)


# -- Bruhat/Chevalley tables ------------------------------------------------


class BruhatTables:
    """Integer-indexed Weyl group with the data needed by the Chevalley rules.

    ``edges[w]`` lists ``(w s_gamma, gamma^vee, l(w s_gamma))`` for every
    positive root gamma.
    """

    def __init__(self, ct: CartanType):
        self.cartan_type = ct
        self.datum: RootDatum = build_root_system(ct)
        self.group: WeylGroup = weyl_group(ct)
        self.elements = self.group.elements
        self.index = self.group.index
        self.length = [w.length for w in self.elements]
        refl = [
            (reflection(ct, g), self.datum.coroot(g)) for g in self.datum.positive_roots
        ]
        self.coroots = [cv for _, cv in refl]
        self.edges = []
        for w in self.elements:
            row = []
            for s, cv in refl:
                t = self.index[w * s]
                row.append((t, cv, self.length[t]))
            self.edges.append(row)
        self.by_length = defaultdict(list)
        for k, l in enumerate(self.length):
            self.by_length[l].append(k)

    def chevalley(self, i: int, w: int) -> dict:
        """Classical Chevalley rule: S_{s_i} S_w = sum <varpi_i, gamma^vee> S_{w s_gamma}."""
        l = self.length[w]
        out = {}
        for t, cv, lt in self.edges[w]:
            if lt == l + 1 and cv[i]:
                out[t] = out.get(t, 0) + cv[i]
        return out

    def quantum_chevalley(self, i: int, w: int) -> dict:
        """Quantum Chevalley rule on G/B; keys (index, degree as coroot coefficients)."""
        l = self.length[w]
        zero = (0,) * self.datum.rank
        out = {}
        for t, cv, lt in self.edges[w]:
            if not cv[i]:
                continue
            if lt == l + 1:
                key = (t, zero)
            elif lt == l + 1 - 2 * sum(cv):
                key = (t, cv)
            else:
                continue
            out[key] = out.get(key, 0) + cv[i]
        return out


@lru_cache(maxsize=None)
def bruhat_tables(ct: CartanType) -> BruhatTables:
    return BruhatTables(ct)


def chevalley(i: int, w: WeylElt) -> dict:
    """Classical Chevalley product of the divisor S_{s_i} with S_w, as {WeylElt: coeff}."""
    T = bruhat_tables(w.cartan_type)
    return {T.elements[t]: c for t, c in T.chevalley(i, T.index[w]).items()}


def giambelli_recipes(T: BruhatTables) -> dict:
    """For each w with l(w) >= 1, coefficients a with S_w = sum a[(i, v)] S_{s_i} S_v, l(v) = l(w) - 1.

    Found by exact linear algebra on each graded piece; H*(G/B, Q) is generated
    in degree 2, so each piece is spanned by the classical Chevalley images.
    """
    recipes = {}
    n = T.datum.rank
    for k in range(1, max(T.length) + 1):
        targets = T.by_length[k]
        row_of = {t: r for r, t in enumerate(targets)}
        cols, cands = [], []
        for v in T.by_length[k - 1]:
            for i in range(n):
                img = T.chevalley(i, v)
                if img:
                    col = [0] * len(targets)
                    for t, c in img.items():
                        col[row_of[t]] = c
                    cols.append(col)
                    cands.append((i, v))
        # augment [A | I] and reduce to read off a right inverse on pivot columns
        m = len(targets)
        A = [[cols[c][r] for c in range(len(cols))] + [int(r == s) for s in range(m)] for r in range(m)]
        R, piv = rref(A)
        piv_cols = [p for p in piv if p < len(cols)]
        if len(piv_cols) != m:
            raise SchubertError(f"degree {k} piece is not generated by divisors")
        for r_idx, t in enumerate(targets):
            coeffs = {}
            for row, p in enumerate(piv_cols):
                a = R[row][len(cols) + r_idx]
                if a:
                    coeffs[cands[p]] = a
            recipes[t] = coeffs
    return recipes


class SchubertRing:
    """Products in H*(G/B, Q) computed through the classical Chevalley rule."""

    def __init__(self, ct: CartanType):
        self.tables = bruhat_tables(ct)
        self.recipes = giambelli_recipes(self.tables)
        self._memo: dict = {}

    def _apply_divisor(self, i: int, cls: dict) -> dict:
        out = defaultdict(Fraction)
        for w, c in cls.items():
            for t, a in self.tables.chevalley(i, w).items():
                out[t] += a * c
        return {k: v for k, v in out.items() if v}

    def product(self, u: int, v: int) -> dict:
        """S_u S_v on the integer index; {index: coefficient}."""
        key = (u, v) if u <= v else (v, u)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self.tables.length[u] > self.tables.length[v]:
            u, v = v, u
        if self.tables.length[u] == 0:
            res = {v: Fraction(1)}
        else:
            acc = defaultdict(Fraction)
            for (i, x), a in self.recipes[u].items():
                for t, c in self._apply_divisor(i, self.product(x, v)).items():
                    acc[t] += a * c
            res = {k: c for k, c in acc.items() if c}
        self._memo[key] = res
        return res

    def multiply(self, u: WeylElt, v: WeylElt) -> dict:
        T = self.tables
        return {T.elements[k]: c for k, c in self.product(T.index[u], T.index[v]).items()}


@lru_cache(maxsize=None)
def schubert_ring(ct: CartanType) -> SchubertRing:
    return SchubertRing(ct)


def _check_reps(p: ParabolicDatum, *ws):
    for w in ws:
        if any(w.has_right_descent(i) for i in p.delta_p):
            raise ParabolicError(f"{w!r} is not in W^P")


def triple_number(p: ParabolicDatum, w1: WeylElt, w2: WeylElt, w3: WeylElt) -> int:
    """c(w1, w2, w3) = integral of sigma_{w1} sigma_{w2} sigma_{w3} over G/P."""
    _check_reps(p, w1, w2, w3)
    if w1.length + w2.length + w3.length != 2 * p.dim:
        return 0
    ring = schubert_ring(p.cartan_type)
    T = ring.tables
    prod = ring.product(T.index[p.dual(w1)], T.index[p.dual(w2)])
    c = prod.get(T.index[w3], Fraction(0))
    if c.denominator != 1 or c < 0:
        raise SchubertError(f"non-enumerative structure constant {c}")
    return int(c)


def classical_chi_condition(p: ParabolicDatum, w1: WeylElt, w2: WeylElt, w3: WeylElt) -> bool:
    """#Phi(w1,chi) + #Phi(w2,chi) + #Phi(w3,chi) = 2 #Phi(G/P,chi) for every chi."""
    counts = [chi_counts(p, w) for w in (w1, w2, w3)]
    return all(
        sum(c[chi] for c in counts) == 2 * len(roots) for chi, roots in p.chi_classes.items()
    )
