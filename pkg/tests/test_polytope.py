import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import A1_VERTICES, naive_vertices
from qhorn.horn import Mode, generate, to_hrep
from qhorn.polytope import (
    HRep,
    PolytopeError,
    brute_force_vertices,
    facets,
    normalized_row,
    vertices,
    verify,
)
from qhorn.rootsys import parse_group


def cube(n):
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        rows.append((tuple(e), 1))
        rows.append((tuple(-x for x in e), 0))
    return HRep.from_rows(rows)


def simplex(n):
    rows = [(tuple(-int(i == j) for j in range(n)), 0) for i in range(n)]
    rows.append((tuple([1] * n), 1))
    return HRep.from_rows(rows)


def test_standard_simplex():
    v = vertices(simplex(3))
    assert len(v) == 4
    assert len(facets(simplex(3))) == 4
    assert verify(simplex(3), v)


def test_cube_with_redundant_rows():
    h = HRep.from_rows(list(cube(3).rows) + [((1, 1, 1), 3), ((2, 0, 0), 2), ((1, 0, 0), 1)])
    f = facets(h)
    assert len(f) == 6
    assert vertices(h).as_set() == {tuple(map(Fraction, p)) for p in product((0, 1), repeat=3)}


def test_a1_system():
    h = to_hrep(generate(parse_group("A1"), Mode.TH3))
    assert vertices(h).as_set() == A1_VERTICES
    assert len(facets(h)) == 4
    assert brute_force_vertices(h).as_set() == A1_VERTICES


def test_unbounded_and_empty():
    with pytest.raises(PolytopeError):
        vertices(HRep.from_rows([((-1, 0), 0), ((0, -1), 0)]))
    with pytest.raises(PolytopeError):
        facets(HRep.from_rows([((1,), 0), ((-1,), -1)]))
    with pytest.raises(PolytopeError):
        HRep.from_rows([((1,), 0), ((1, 2), 0)])


def test_verify_negative_control():
    h = simplex(3)
    v = vertices(h)
    pts = list(v.points)
    pts[0] = (pts[0][0] + 1,) + pts[0][1:]
    from qhorn.polytope import VRep

    assert not verify(h, VRep(tuple(pts)))


def test_g2_verifies():
    h = to_hrep(generate(parse_group("G2"), Mode.TH3))
    f = facets(h)
    v = vertices(h)
    assert (len(v), len(f)) == (30, 48)
    assert verify(f, v)


def random_polytope(rng, n, m):
    rows = list(cube(n).rows)
    for _ in range(m):
        a = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
        if any(a):
            rows.append((a, Fraction(rng.randint(1, 4), rng.randint(1, 3))))
    return HRep.from_rows(rows)


@given(st.integers(0, 10**6), st.integers(2, 3), st.integers(0, 8))
def test_dd_equals_brute_force(seed, n, m):
    h = random_polytope(random.Random(seed), n, m)
    assert len(h) <= 20
    v = vertices(h)
    assert v.as_set() == brute_force_vertices(h).as_set()
    assert v.as_set() == naive_vertices(list(h.rows))


@given(st.integers(0, 10**6), st.integers(2, 3), st.integers(0, 8))
def test_facets_idempotent_and_permutation_invariant(seed, n, m):
    rng = random.Random(seed)
    h = random_polytope(rng, n, m)
    f = facets(h)
    assert {normalized_row(*r) for r in facets(f).rows} == {normalized_row(*r) for r in f.rows}
    assert vertices(f).as_set() == vertices(h).as_set()
    rows = list(h.rows)
    rng.shuffle(rows)
    g = HRep.from_rows(rows)
    assert len(facets(g)) == len(f)
    assert vertices(g).as_set() == vertices(h).as_set()
    assert verify(f, vertices(f))
