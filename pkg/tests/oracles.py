"""Independent reference data for the test-suite.

Nothing here imports qhorn: every value is either hard-coded from standard
tables or computed by a naive method that shares no code with the package.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

# Bourbaki Cartan matrices, C[i][j] = <alpha_j, alpha_i^vee>
CARTAN = {
    ("A", 1): [[2]],
    ("A", 2): [[2, -1], [-1, 2]],
    ("B", 2): [[2, -1], [-2, 2]],
    ("C", 2): [[2, -2], [-1, 2]],
    ("G", 2): [[2, -3], [-1, 2]],
    ("B", 3): [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    ("C", 3): [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    ("A", 3): [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
}

# |W| and |Phi^+|
WEYL_ORDER = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "G2": 12, "B3": 48, "C3": 48, "D4": 192, "F4": 1152}
N_POSITIVE = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "C2": 4, "G2": 6, "B3": 9, "C3": 9, "D4": 12, "F4": 24}

# highest root in the simple-root basis
HIGHEST_ROOT = {
    "A2": (1, 1),
    "C2": (2, 1),
    "B2": (1, 2),
    "G2": (3, 2),
    "B3": (1, 2, 2),
    "C3": (2, 2, 1),
    "D4": (1, 2, 1, 1),
    "F4": (2, 3, 4, 2),
}

# reference table rows reachable at desk scale: MAX, TW, TWBK, TH3, vertices, facets
REFERENCE_TABLE = {
    "G2": (103, 82, 79, 48, 30, 48),
    "Sp(4)": (43, 42, 41, 38, 13, 38),
    "Spin(7)": (378, 322, 289, 191, 65, 191),
    "Sp(6)": (363, 329, 296, 200, 66, 200),
    "Spin(8)": (1434, 1347, 1164, 771, 137, 771),
    "Spin(9)": (4940, 3231, 2748, 1046, 385, 1046),
    "Sp(8)": (4679, 3604, 3130, 1204, 444, 1204),
}

A1_VERTICES = {
    (Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(1), Fraction(0)),
    (Fraction(1), Fraction(0), Fraction(1)),
    (Fraction(0), Fraction(1), Fraction(1)),
}


def det(M) -> Fraction:
    """Fraction Gaussian elimination determinant."""
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    out = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        out *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            for k in range(c, n):
                M[r][k] -= f * M[c][k]
    return out


def cramer(A, b):
    d = det(A)
    if d == 0:
        return None
    out = []
    for j in range(len(A)):
        Aj = [row[:j] + [b[i]] + row[j + 1:] for i, row in enumerate(A)]
        out.append(det(Aj) / d)
    return tuple(out)


def naive_vertices(rows):
    """Vertices of {x : a.x <= b} by Cramer's rule on every n-subset of rows."""
    n = len(rows[0][0])
    pts = set()
    for idx in combinations(range(len(rows)), n):
        x = cramer([list(map(Fraction, rows[i][0])) for i in idx], [Fraction(rows[i][1]) for i in idx])
        if x is None:
            continue
        if all(sum(Fraction(a) * y for a, y in zip(r[0], x)) <= r[1] for r in rows):
            pts.add(x)
    return pts


def binom(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
