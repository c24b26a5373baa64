"""Standard parabolic data: Phi(G/P), the X*(Z)-grading, n_beta, Peterson-Woodward lifts."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product

from .rootsys import CartanType, RootDatum, build_root_system, inverse_matrix, pairing
from .weyl import WeylElt, longest_element, min_coset_reps


class ParabolicError(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicDatum:
    cartan_type: CartanType
    delta_p: frozenset

    @property
    def datum(self) -> RootDatum:
        return build_root_system(self.cartan_type)

    @cached_property
    def outside(self) -> tuple[int, ...]:
        """Delta minus Delta_P, ascending."""
        return tuple(i for i in range(self.datum.rank) if i not in self.delta_p)

    @cached_property
    def levi_positive(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            r
            for r in self.datum.positive_roots
            if all(r[i] == 0 for i in self.outside)
        )

    @cached_property
    def phi_gp(self) -> tuple[tuple[int, ...], ...]:
        levi = set(self.levi_positive)
        return tuple(r for r in self.datum.positive_roots if r not in levi)

    @property
    def dim(self) -> int:
        return len(self.phi_gp)

    @cached_property
    def rho_l(self) -> tuple[Fraction, ...]:
        d = self.datum
        total = [Fraction(0)] * d.rank
        for r in self.levi_positive:
            for k, x in enumerate(d.root_to_weight(r)):
                total[k] += x
        return tuple(x / 2 for x in total)

    @cached_property
    def w0_p(self) -> WeylElt:
        return longest_element(self.datum, self.delta_p)

    @cached_property
    def reps(self) -> list[WeylElt]:
        return min_coset_reps(self.datum, self.delta_p)

    @cached_property
    def chi_classes(self) -> dict:
        """chi -> Phi(G/P, chi), chi keyed by the coefficient tuple on Delta - Delta_P."""
        out = defaultdict(list)
        for r in self.phi_gp:
            out[tuple(r[i] for i in self.outside)].append(r)
        return dict(sorted(out.items()))

    @cached_property
    def n(self) -> dict:
        return {b: n_beta(self, b) for b in self.outside}

    def dual(self, w: WeylElt) -> WeylElt:
        """w -> w0 w w_{0,P}; an involution of W^P exchanging l(w) and dim - l(w)."""
        w0 = longest_element(self.datum)
        return w0 * w * self.w0_p


def parabolic(ct: CartanType, delta_p) -> ParabolicDatum:
    delta_p = frozenset(delta_p)
    if not delta_p <= set(range(ct.rank)):
        raise ParabolicError(f"bad parabolic {sorted(delta_p)}")
    return _parabolic(ct, delta_p)


@lru_cache(maxsize=None)
def _parabolic(ct: CartanType, delta_p: frozenset) -> ParabolicDatum:
    return ParabolicDatum(ct, delta_p)


def maximal_parabolic(ct: CartanType, beta: int) -> ParabolicDatum:
    """P_beta: Delta_P = Delta - {beta}."""
    return parabolic(ct, frozenset(range(ct.rank)) - {beta})


def chi_of(p: ParabolicDatum, alpha) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if alpha not in set(p.phi_gp):
        raise ParabolicError(f"{alpha} is not in Phi(G/P)")
    return tuple(alpha[i] for i in p.outside)


def phi_w_chi(p: ParabolicDatum, w: WeylElt, chi) -> set:
    """Phi(w) intersected with Phi(G/P, chi)."""
    inv = w.inversions
    if any(r in inv for r in p.levi_positive):
        raise ParabolicError(f"{w!r} is not a minimal coset representative")
    return {r for r in p.chi_classes.get(tuple(chi), ()) if r in inv}


def chi_counts(p: ParabolicDatum, w: WeylElt) -> dict:
    """chi -> #Phi(w, chi) for every chi class of Phi(G/P)."""
    inv = w.inversions
    return {chi: sum(r in inv for r in roots) for chi, roots in p.chi_classes.items()}


def n_beta(p: ParabolicDatum, beta: int) -> int:
    """<beta^vee, 2(rho - rho^L)>."""
    if beta in p.delta_p:
        raise ParabolicError(f"simple root {beta} lies in Delta_P")
    d = p.datum
    coroot = tuple(int(i == beta) for i in range(d.rank))
    val = pairing(tuple(2 * (a - b) for a, b in zip(d.rho, p.rho_l)), coroot)
    return int(val)


def _pair_coweight_root(d: RootDatum, h, r) -> Fraction:
    return pairing(d.root_to_weight(r), h)


def pw_lift(p: ParabolicDatum, h) -> tuple[int, ...]:
    """Peterson-Woodward representative of h modulo the Levi coroot lattice.

    Returns the unique h' = h + sum_{alpha in Delta_P} c_alpha alpha^vee with
    <h', gamma> in {0, -1} for every positive Levi root gamma.
    """
    d = p.datum
    h = tuple(int(x) for x in h)
    levi = sorted(p.delta_p)
    if not levi:
        return h
    C = d.cartan_matrix
    # <sum c_a a^vee, b> = sum_a c_a C[a][b] over Levi simple roots b
    M = [[Fraction(C[a][b]) for a in levi] for b in levi]
    base = [_pair_coweight_root(d, h, d.simple_roots[b]) for b in levi]
    Minv = inverse_matrix(M)
    found = []
    for target in product((0, -1), repeat=len(levi)):
        rhs = [Fraction(t) - b for t, b in zip(target, base)]
        c = [sum((Minv[i][j] * rhs[j] for j in range(len(levi))), Fraction(0)) for i in range(len(levi))]
        if any(x.denominator != 1 for x in c):
            continue
        cand = list(h)
        for a, x in zip(levi, c):
            cand[a] += int(x)
        cand = tuple(cand)
        if all(_pair_coweight_root(d, cand, r) in (0, -1) for r in p.levi_positive):
            found.append(cand)
    if len(found) != 1:
        raise ParabolicError(f"Peterson-Woodward lift not unique/absent for {h}: {found}")
    return found[0]
