"""Horn-type inequality lists for the multiplicative (and additive) problem.

A point is a triple of alcove points; each alcove point is stored by its
coordinates ``t_alpha = <tau, alpha>`` on the simple roots, i.e.
``tau = sum t_alpha varpi_{alpha^vee}``.  The linear form ``<lambda, tau>`` of a
weight ``lambda = sum c_alpha alpha`` is then ``sum c_alpha t_alpha``.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .parabolic import ParabolicDatum, chi_counts, maximal_parabolic, n_beta
from .quantum import degree_bound, parabolic_gw
from .rootsys import CartanType, build_root_system, fundamental_weight_as_roots
from .schubert import classical_chi_condition, triple_number
from .weyl import WeylElt

log = logging.getLogger(__name__)


class HornError(ValueError):
    pass


class Mode(str, enum.Enum):
    MAX = "max"
    TW = "tw"
    TWBK = "twbk"
    TH3 = "th3"
    ADDITIVE = "additive"


class Kind(str, enum.Enum):
    HORN = "HORN"
    DOMINANCE = "DOMINANCE"
    ALCOVE = "ALCOVE"


Form = tuple  # three coefficient tuples


@dataclass(frozen=True)
class Inequality:
    """sum_i <lhs[i], t_i> <= rhs over the three alcove points."""

    kind: Kind
    lhs: tuple[tuple[Fraction, ...], tuple[Fraction, ...], tuple[Fraction, ...]]
    rhs: Fraction
    beta: int | None = None
    d: int | None = None
    witnesses: tuple[WeylElt, WeylElt, WeylElt] | None = field(default=None, compare=False)

    @property
    def key(self) -> tuple:
        """Canonical dedup key: the form scaled to a primitive integer vector."""
        return canonical_key(self.lhs, self.rhs)

    @property
    def row(self) -> tuple[tuple[Fraction, ...], Fraction]:
        return tuple(x for part in self.lhs for x in part), self.rhs

    def evaluate(self, t1, t2, t3) -> Fraction:
        return sum(
            (Fraction(a) * x for part, t in zip(self.lhs, (t1, t2, t3)) for a, x in zip(part, t)),
            Fraction(0),
        )

    @property
    def words(self) -> list[list[int]]:
        if self.witnesses is None:
            return [[], [], []]
        return [[i + 1 for i in w.reduced_word] for w in self.witnesses]


def canonical_key(lhs, rhs) -> tuple:
    from math import gcd

    flat = [Fraction(x) for part in lhs for x in part] + [Fraction(rhs)]
    den = 1
    for x in flat:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in flat]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    return tuple(x // g for x in ints)


def to_linear_form(ct: CartanType, beta: int, ws) -> tuple:
    """Coefficient vectors of <w_i varpi_beta, tau_i> in alcove coordinates."""
    d = build_root_system(ct)
    varpi = fundamental_weight_as_roots(d, beta)
    return tuple(tuple(w.act_root(varpi)) for w in ws)


def to_coweight_form(ineq: Inequality, level: int = 1) -> tuple:
    """The same half-space written as <w_i varpi_{beta^vee}, lambda_i> <= 2/(beta,beta) * level * d.

    Under the form identification varpi_{beta^vee} = (2/(beta,beta)) varpi_beta, so
    the left side and the right side scale by the same factor.
    """
    if ineq.kind is not Kind.HORN:
        return ineq.lhs, ineq.rhs * level
    d = build_root_system(_type_of(ineq))
    factor = Fraction(2) / d.simple_norms[ineq.beta]
    lhs = tuple(tuple(x * factor for x in part) for part in ineq.lhs)
    return lhs, factor * ineq.rhs * level


def _type_of(ineq: Inequality) -> CartanType:
    return ineq.witnesses[0].cartan_type


def chi_condition_quantum(p: ParabolicDatum, w1, w2, w3, d: int, beta: int) -> bool:
    """Per-chi balance: sum_i #Phi(w_i, chi) + sum_{alpha in Phi(G/P,chi)} d<beta^vee, alpha> = 2 #Phi(G/P, chi)."""
    dat = p.datum
    counts = [chi_counts(p, w) for w in (w1, w2, w3)]
    for chi, roots in p.chi_classes.items():
        pair = sum(sum(dat.cartan_matrix[beta][j] * r[j] for j in range(dat.rank)) for r in roots)
        if sum(c[chi] for c in counts) + d * pair != 2 * len(roots):
            return False
    return True


def dominance_alcove(ct: CartanType, kinds=(Kind.DOMINANCE, Kind.ALCOVE)) -> list[Inequality]:
    """The 3 (rank + 1) rows -t_alpha <= 0 and <tau, theta> <= 1 for each point."""
    d = build_root_system(ct)
    n = d.rank
    zero = tuple(Fraction(0) for _ in range(n))
    out = []
    for slot in range(3):
        for a in range(n):
            if Kind.DOMINANCE in kinds:
                part = tuple(Fraction(-int(k == a)) for k in range(n))
                lhs = tuple(part if s == slot else zero for s in range(3))
                out.append(Inequality(Kind.DOMINANCE, lhs, Fraction(0)))
        if Kind.ALCOVE in kinds:
            part = tuple(Fraction(c) for c in d.highest_root)
            lhs = tuple(part if s == slot else zero for s in range(3))
            out.append(Inequality(Kind.ALCOVE, lhs, Fraction(1)))
    return out


def _admissible_triples(p: ParabolicDatum, beta: int, d: int):
    """Triples of W^P passing the total grading at degree d."""
    target = 2 * p.dim - d * n_beta(p, beta)
    reps = p.reps
    by_len = {}
    for w in reps:
        by_len.setdefault(w.length, []).append(w)
    for w1, w2 in product(reps, repeat=2):
        for w3 in by_len.get(target - w1.length - w2.length, ()):
            yield w1, w2, w3


def _keep(mode: Mode, p, beta, d, ws, gw: int) -> bool:
    if mode is Mode.MAX:
        return gw != 0
    if gw != 1:
        return False
    if mode is Mode.TW:
        return True
    if mode is Mode.TWBK:
        return d > 0 or classical_chi_condition(p, *ws)
    if mode is Mode.TH3:
        return chi_condition_quantum(p, *ws, d, beta)
    raise HornError(f"unsupported mode {mode}")


def _slice(ct: CartanType, mode: Mode, beta: int, d: int) -> list[Inequality]:
    p = maximal_parabolic(ct, beta)
    out = []
    if mode is Mode.ADDITIVE:
        if d:
            return out
        for ws in _admissible_triples(p, beta, 0):
            if triple_number(p, *ws) == 1 and classical_chi_condition(p, *ws):
                lhs = to_linear_form(ct, beta, ws)
                out.append(Inequality(Kind.HORN, lhs, Fraction(0), beta, 0, ws))
        return out
    pg = parabolic_gw(p)
    for ws in _admissible_triples(p, beta, d):
        gw = pg.gw(*ws, (d,))
        if _keep(mode, p, beta, d, ws, gw):
            lhs = to_linear_form(ct, beta, ws)
            out.append(Inequality(Kind.HORN, lhs, Fraction(d), beta, d, ws))
    return out


def generate(ct: CartanType, mode, jobs: int = 1) -> list[Inequality]:
    """Horn inequalities of the given mode plus the dominance/alcove rows, deduplicated.

    Order: beta ascending, d ascending, triples in Weyl order; then the
    dominance/alcove block.
    """
    mode = Mode(mode)
    slices = []
    for beta in range(ct.rank):
        p = maximal_parabolic(ct, beta)
        top = 0 if mode is Mode.ADDITIVE else degree_bound(p, beta)
        slices.extend((beta, d) for d in range(top + 1))
    if jobs > 1:
        # warm the shared G/B tables once so worker threads only read them
        for beta in range(ct.rank):
            parabolic_gw(maximal_parabolic(ct, beta))
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda bd: _slice(ct, mode, *bd), slices))
    else:
        parts = [_slice(ct, mode, *bd) for bd in slices]
    extra = (
        dominance_alcove(ct, (Kind.DOMINANCE,))
        if mode is Mode.ADDITIVE
        else dominance_alcove(ct)
    )
    seen = set()
    out = []
    for ineq in [x for part in parts for x in part] + extra:
        k = ineq.key
        if k in seen:
            continue
        seen.add(k)
        out.append(ineq)
    log.info("%s %s: %d inequalities", ct, mode.value, len(out))
    return out


@dataclass
class Verdict:
    status: str  # inside / boundary / outside
    tight: list[int]  # every row attaining equality, box rows included
    violated: list[int]


def membership(ineqs: list[Inequality], t1, t2, t3) -> Verdict:
    """Classify a triple of alcove points against an inequality list.

    ``boundary`` means no row is violated and at least one row is tight.  The
    origin triple is a vertex of the polytope (every d = 0 row is homogeneous),
    so it reports ``boundary``, never ``outside``.
    """
    n = len(ineqs[0].lhs[0]) if ineqs else 0
    pts = [tuple(Fraction(x) for x in t) for t in (t1, t2, t3)]
    if any(len(t) != n for t in pts):
        raise HornError("rank mismatch")
    tight, violated = [], []
    for k, ineq in enumerate(ineqs):
        v = ineq.evaluate(*pts)
        if v > ineq.rhs:
            violated.append(k)
        elif v == ineq.rhs:
            tight.append(k)
    status = "outside" if violated else ("boundary" if tight else "inside")
    return Verdict(status, tight, violated)


@dataclass
class PWLiftReport:
    group: CartanType
    rows: list  # (beta, d, h_pw, min pairing over Phi(G/P_beta))
    violations: list  # (beta, d, alpha, pairing) with pairing < -1

    def lines(self) -> list[str]:
        out = [f"# Peterson-Woodward lift scan for {self.group}"]
        for beta, d, h, m in self.rows:
            out.append(f"beta={beta + 1} d={d} h_PW={list(h)} min<h_PW,alpha>={m}")
        out.append(f"violations: {len(self.violations)}")
        for beta, d, a, v in self.violations:
            out.append(f"  beta={beta + 1} d={d} alpha={list(a)} pairing={v}")
        return out


def check_pw_lift(ct: CartanType) -> PWLiftReport:
    """Scan <h_PW, alpha> >= -1 over alpha in Phi(G/P_beta), h = d beta^vee, 0 <= d <= bound."""
    from .parabolic import pw_lift

    dat = build_root_system(ct)
    rows, bad = [], []
    for beta in range(ct.rank):
        p = maximal_parabolic(ct, beta)
        for d in range(degree_bound(p, beta) + 1):
            h = tuple(d * int(k == beta) for k in range(ct.rank))
            hp = pw_lift(p, h)
            vals = []
            for a in p.phi_gp:
                v = sum(hp[k] * dat.cartan_matrix[k][j] * a[j] for k in range(ct.rank) for j in range(ct.rank))
                vals.append(v)
                if v < -1:
                    bad.append((beta, d, a, v))
            rows.append((beta, d, hp, min(vals) if vals else None))
    return PWLiftReport(ct, rows, bad)


def to_hrep(ineqs: list[Inequality]):
    """HRep of an inequality list, dominance/alcove rows first.

    Putting the bounded box first keeps the double-description intermediates
    small; row order does not change the polytope.
    """
    from .polytope import HRep

    box = [i for i in ineqs if i.kind is not Kind.HORN]
    horn = [i for i in ineqs if i.kind is Kind.HORN]
    return HRep.from_rows([i.row for i in box + horn])
