"""Small quantum cohomology of G/B and three-point Gromov-Witten invariants of G/P.

Products in QH*(G/B) come from the quantum Chevalley rule together with a
quantum Giambelli recursion (every Schubert class is written as a polynomial
in the divisor operators and the q's).  Invariants of G/P are read off G/B
products through the Peterson-Woodward comparison: a G/P degree d is lifted
to its Peterson-Woodward representative d_B, and the third index is twisted
by w_{0,P} w_{0,P'}.

All public GW functions use the Horn indexing: ``sigma_w`` is the class of the
Schubert variety of dimension ``l(w)``, so GW(w1, w2, w3; d) is nonzero only if
``l(w1) + l(w2) + l(w3) + sum d_b n_b = 2 dim``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .parabolic import ParabolicDatum, ParabolicError, n_beta, parabolic, pw_lift
from .rootsys import CartanType
from .schubert import BruhatTables, SchubertError, bruhat_tables, giambelli_recipes
from .weyl import WeylElt, longest_element


class QuantumError(ArithmeticError):
    pass


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class QuantumCohomology:
    """QH*(G/B) with memoised products.

    Classes are dicts ``{(element index, degree tuple): coefficient}`` where the
    degree is the exponent vector of q over the simple coroots.
    """

    def __init__(self, ct: CartanType):
        self.cartan_type = ct
        self.tables: BruhatTables = bruhat_tables(ct)
        self.rank = self.tables.datum.rank
        self.zero = (0,) * self.rank
        self._qchev = [
            [self.tables.quantum_chevalley(i, w) for w in range(len(self.tables.elements))]
            for i in range(self.rank)
        ]
        self.recipes = self._quantum_recipes()
        self._memo: dict = {}

    def _quantum_recipes(self) -> dict:
        """Q_u = sum a (D_i Q_v - sum c q^d Q_t) where the q-terms of D_i * S_v are stripped."""
        out = {}
        for u, coeffs in giambelli_recipes(self.tables).items():
            steps = []
            for (i, v), a in coeffs.items():
                corrections = [
                    (t, d, c) for (t, d), c in self._qchev[i][v].items() if d != self.zero
                ]
                steps.append((a, i, v, corrections))
            out[u] = steps
        return out

    def divisor(self, i: int, cls: dict) -> dict:
        """D_i * cls via the quantum Chevalley rule."""
        out = defaultdict(Fraction)
        for (w, d), c in cls.items():
            for (t, e), a in self._qchev[i][w].items():
                out[(t, _add(d, e))] += a * c
        return {k: v for k, v in out.items() if v}

    def apply_giambelli(self, u: int, cls_of) -> dict:
        """Evaluate the Giambelli operator Q_u; ``cls_of(v)`` returns Q_v applied to the target."""
        if self.tables.length[u] == 0:
            return cls_of(u)
        acc = defaultdict(Fraction)
        for a, i, v, corrections in self.recipes[u]:
            for k, c in self.divisor(i, cls_of(v)).items():
                acc[k] += a * c
            for t, d, c in corrections:
                for (w, e), b in cls_of(t).items():
                    acc[(w, _add(d, e))] -= a * c * b
        return {k: v for k, v in acc.items() if v}

    def product(self, u: int, v: int) -> dict:
        """S_u * S_v in QH*(G/B), integer indices."""
        L = self.tables.length
        if (L[u], u) > (L[v], v):
            u, v = v, u
        key = (u, v)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if L[u] == 0:
            res = {(v, self.zero): Fraction(1)}
        else:
            res = self.apply_giambelli(u, lambda x: self.product(x, v))
        self._memo[key] = res
        return res

    def giambelli_check(self, u: int) -> bool:
        """Q_u applied to the unit class is exactly S_u."""
        memo = {}

        def on_unit(x):
            if x not in memo:
                if self.tables.length[x] == 0:
                    memo[x] = {(0, self.zero): Fraction(1)}
                else:
                    memo[x] = self.apply_giambelli(x, on_unit)
            return memo[x]

        return on_unit(u) == {(u, self.zero): Fraction(1)}

    def giambelli_polynomial(self, u: int) -> dict:
        """Q_u as {(D exponents, q exponents): coefficient}."""
        memo = {}

        def poly(x):
            if x in memo:
                return memo[x]
            if self.tables.length[x] == 0:
                res = {(self.zero, self.zero): Fraction(1)}
            else:
                acc = defaultdict(Fraction)
                for a, i, v, corrections in self.recipes[x]:
                    bump = tuple(int(k == i) for k in range(self.rank))
                    for (dm, qm), c in poly(v).items():
                        acc[(_add(dm, bump), qm)] += a * c
                    for t, d, c in corrections:
                        for (dm, qm), b in poly(t).items():
                            acc[(dm, _add(qm, d))] -= a * c * b
                res = {k: c for k, c in acc.items() if c}
            memo[x] = res
            return res

        return poly(u)


@lru_cache(maxsize=None)
def quantum_cohomology(ct: CartanType) -> QuantumCohomology:
    return QuantumCohomology(ct)


def _to_elts(qh: QuantumCohomology, cls: dict) -> dict:
    E = qh.tables.elements
    return {(E[w], d): c for (w, d), c in cls.items()}


def quantum_chevalley(i: int, w: WeylElt) -> dict:
    """S_{s_i} * S_w as {(WeylElt, degree): coefficient}."""
    qh = quantum_cohomology(w.cartan_type)
    return _to_elts(qh, qh._qchev[i][qh.tables.index[w]])


def quantum_giambelli(w: WeylElt) -> dict:
    qh = quantum_cohomology(w.cartan_type)
    return qh.giambelli_polynomial(qh.tables.index[w])


def quantum_product(u: WeylElt, v: WeylElt) -> dict:
    """S_u * S_v in QH*(G/B) (codegree indexing)."""
    if u.cartan_type != v.cartan_type:
        raise QuantumError("elements of different groups")
    qh = quantum_cohomology(u.cartan_type)
    T = qh.tables
    return _to_elts(qh, qh.product(T.index[u], T.index[v]))


def _enumerative(c: Fraction) -> int:
    if c.denominator != 1 or c < 0:
        raise QuantumError(f"non-enumerative Gromov-Witten coefficient {c}")
    return int(c)


def gw_gb(w1: WeylElt, w2: WeylElt, w3: WeylElt, d) -> int:
    """GW(w1, w2, w3; d) on G/B, d given as coroot coefficients."""
    ct = w1.cartan_type
    d = tuple(int(x) for x in d)
    if any(x < 0 for x in d):
        return 0
    qh = quantum_cohomology(ct)
    T = qh.tables
    if w1.length + w2.length + w3.length + 2 * sum(d) != 2 * len(T.datum.positive_roots):
        return 0
    w0 = T.group.w0
    prod = qh.product(T.index[w0 * w1], T.index[w0 * w2])
    return _enumerative(prod.get((T.index[w3], d), Fraction(0)))


@dataclass(frozen=True)
class GwQuery:
    w1: WeylElt
    w2: WeylElt
    w3: WeylElt
    beta: int
    d: int


def degree_bound(p: ParabolicDatum, beta: int) -> int:
    """Largest d with 2 dim(G/P) - d n_beta >= 0."""
    return (2 * p.dim) // n_beta(p, beta)


class ParabolicGW:
    """Gromov-Witten invariants of G/P via the Peterson-Woodward comparison."""

    def __init__(self, p: ParabolicDatum):
        self.p = p
        self.qh = quantum_cohomology(p.cartan_type)
        self.T = self.qh.tables
        self._lift: dict = {}

    def lift(self, degree) -> tuple:
        """(d_B, index twist w_{0,P} w_{0,P'}) for a degree over Delta - Delta_P."""
        degree = tuple(degree)
        hit = self._lift.get(degree)
        if hit is None:
            p = self.p
            h = [0] * p.datum.rank
            for b, x in zip(p.outside, degree):
                h[b] = x
            hb = pw_lift(p, h)
            d = p.datum
            flat = frozenset(
                a for a in p.delta_p
                if sum(hb[k] * d.cartan_matrix[k][a] for k in range(d.rank)) == 0
            )
            twist = p.w0_p * longest_element(d, flat)
            hit = self._lift[degree] = (hb, twist)
        return hit

    def gw(self, w1: WeylElt, w2: WeylElt, w3: WeylElt, degree) -> int:
        p = self.p
        for w in (w1, w2, w3):
            if any(w.has_right_descent(i) for i in p.delta_p):
                raise ParabolicError(f"{w!r} is not in W^P")
        degree = tuple(int(x) for x in degree)
        if any(x < 0 for x in degree):
            return 0
        graded = w1.length + w2.length + w3.length + sum(
            x * n_beta(p, b) for b, x in zip(p.outside, degree)
        )
        if graded != 2 * p.dim:
            return 0
        hb, twist = self.lift(degree)
        if any(x < 0 for x in hb):
            return 0
        T = self.T
        prod = self.qh.product(T.index[p.dual(w1)], T.index[p.dual(w2)])
        return _enumerative(prod.get((T.index[w3 * twist], hb), Fraction(0)))


@lru_cache(maxsize=None)
def parabolic_gw(p: ParabolicDatum) -> ParabolicGW:
    return ParabolicGW(p)


def gw_gp(query: GwQuery) -> int:
    """GW(w1, w2, w3; d sigma*_{s_beta}) on G/P_beta."""
    ct = query.w1.cartan_type
    p = parabolic(ct, frozenset(range(ct.rank)) - {query.beta})
    return parabolic_gw(p).gw(query.w1, query.w2, query.w3, (query.d,))
