"""Exact rational simplex (dictionary form, Bland's rule).

Solves  max c.x  s.t.  A x <= b  with x free.  Free variables are split as
x = x+ - x-; infeasible origins are handled by Chvatal's auxiliary variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class LPError(ArithmeticError):
    pass


@dataclass
class LPResult:
    status: str  # optimal / unbounded / infeasible
    value: Fraction | None = None
    x: list[Fraction] | None = None


class _Dictionary:
    """x_B = rhs - T x_N, objective z = z0 + obj . x_N; variables are integer labels."""

    def __init__(self, basic, nonbasic, rhs, T, obj, z0):
        self.basic = basic
        self.nonbasic = nonbasic
        self.rhs = rhs
        self.T = T
        self.obj = obj
        self.z0 = z0

    def pivot(self, r: int, c: int):
        T, rhs = self.T, self.rhs
        p = T[r][c]
        row = [x / p for x in T[r]]
        row[c] = 1 / p
        rr = rhs[r] / p
        for i in range(len(T)):
            if i == r:
                continue
            f = T[i][c]
            if f:
                Ti = T[i]
                for j, x in enumerate(row):
                    if x:
                        Ti[j] -= f * x
                Ti[c] = -f * row[c]
                rhs[i] -= f * rr
        f = self.obj[c]
        if f:
            for j, x in enumerate(row):
                if x:
                    self.obj[j] -= f * x
            self.obj[c] = -f * row[c]
            self.z0 += f * rr
        T[r] = row
        rhs[r] = rr
        self.basic[r], self.nonbasic[c] = self.nonbasic[c], self.basic[r]

    def run(self, max_pivots: int = 100000) -> str:
        for _ in range(max_pivots):
            # Bland: smallest label among improving columns
            best = None
            for j, v in enumerate(self.obj):
                if v > 0 and (best is None or self.nonbasic[j] < self.nonbasic[best]):
                    best = j
            if best is None:
                return "optimal"
            c = best
            r = None
            ratio = None
            for i, row in enumerate(self.T):
                a = row[c]
                if a > 0:
                    q = self.rhs[i] / a
                    if ratio is None or q < ratio or (q == ratio and self.basic[i] < self.basic[r]):
                        r, ratio = i, q
            if r is None:
                return "unbounded"
            self.pivot(r, c)
        raise LPError("pivot limit reached")


def maximize(c, A, b) -> LPResult:
    """max c.x subject to A x <= b, x free, exact."""
    m = len(A)
    n = len(c)
    c = [Fraction(x) for x in c]
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    # labels: 0..n-1 -> x+, n..2n-1 -> x-, 2n..2n+m-1 -> slacks, 2n+m -> auxiliary
    aux = 2 * n + m
    T = [row + [-x for x in row] for row in A]
    nonbasic = list(range(2 * n))
    basic = [2 * n + i for i in range(m)]
    obj = c + [-x for x in c]
    D = _Dictionary(basic, nonbasic, list(b), T, [Fraction(0)] * (2 * n), Fraction(0))

    if any(x < 0 for x in b):
        for row in D.T:
            row.append(Fraction(-1))
        D.nonbasic.append(aux)
        D.obj = [Fraction(0)] * (2 * n) + [Fraction(-1)]
        r = min(range(m), key=lambda i: (D.rhs[i], D.basic[i]))
        D.pivot(r, len(D.nonbasic) - 1)
        if D.run() != "optimal" or D.z0 < 0:
            return LPResult("infeasible")
        if aux in D.basic:
            r = D.basic.index(aux)
            c_idx = next((j for j, v in enumerate(D.T[r]) if v != 0), None)
            if c_idx is None:
                raise LPError("degenerate auxiliary row")
            D.pivot(r, c_idx)
        k = D.nonbasic.index(aux)
        for row in D.T:
            del row[k]
        del D.nonbasic[k]

    # rewrite the objective over the current nonbasic variables
    full = {j: obj[j] for j in range(2 * n)}
    new_obj = [Fraction(0)] * len(D.nonbasic)
    z0 = Fraction(0)
    for j, lab in enumerate(D.nonbasic):
        new_obj[j] += full.get(lab, 0)
    for i, lab in enumerate(D.basic):
        w = full.get(lab, 0)
        if w:
            z0 += w * D.rhs[i]
            for j, t in enumerate(D.T[i]):
                new_obj[j] -= w * t
    D.obj, D.z0 = new_obj, z0

    status = D.run()
    if status == "unbounded":
        return LPResult("unbounded")
    vals = {lab: D.rhs[i] for i, lab in enumerate(D.basic)}
    x = [vals.get(j, Fraction(0)) - vals.get(n + j, Fraction(0)) for j in range(n)]
    return LPResult("optimal", D.z0, x)
