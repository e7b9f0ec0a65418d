import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lojax.errors import DimensionLimit, EmptyRegion, InvalidInput
from lojax.geometry import (
    HalfSpace,
    HPolyhedron,
    enumerate_faces,
    minimize_linear,
    polytope_volume,
    primitive,
    upward_hull,
)

import oracles

points_2_3 = st.integers(2, 3).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 7)] * n), min_size=1, max_size=6)
)


@pytest.mark.parametrize(
    "v, expected",
    [((4, 6), (2, 3)), ((1, 3), (1, 3)), ((0, 5, 10), (0, 1, 2))],
)
def test_primitive(v, expected):
    assert primitive(v) == expected


def test_primitive_rejects_zero():
    with pytest.raises(InvalidInput):
        primitive((0, 0))


def test_hull_of_three_points():
    vertices, facets = upward_hull([(4, 0), (1, 1), (0, 4)])
    assert set(vertices) == {(4, 0), (1, 1), (0, 4)}
    assert {(f.normal, f.offset) for f in facets} == {((1, 3), 4), ((3, 1), 4), ((1, 0), 0), ((0, 1), 0)}


def test_hull_drops_interior_point():
    vertices, facets = upward_hull([(2, 0), (0, 3), (1, 2)])
    assert set(vertices) == {(2, 0), (0, 3)}
    assert HalfSpace((3, 2), 6) in facets


def test_hull_of_unit_simplex():
    _, facets = upward_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    compact = [f for f in facets if all(c > 0 for c in f.normal)]
    assert compact == [HalfSpace((1, 1, 1), 1)]


def test_hull_rejects_empty_and_large_dimension():
    with pytest.raises(InvalidInput):
        upward_hull([])
    with pytest.raises(DimensionLimit):
        upward_hull([(1,) * 7])


@settings(max_examples=60, deadline=None)
@given(points_2_3)
def test_hull_matches_brute_force_facets(points):
    _, facets = upward_hull(points)
    assert {(f.normal, f.offset) for f in facets} == oracles.brute_upward_facets(points)


@settings(max_examples=60, deadline=None)
@given(points_2_3)
def test_hull_is_idempotent(points):
    vertices, facets = upward_hull(points)
    assert upward_hull(vertices) == (vertices, facets)


@settings(max_examples=40, deadline=None)
@given(points_2_3, st.data())
def test_membership_agrees_with_convex_combination_search(points, data):
    vertices, facets = upward_hull(points)
    n = len(points[0])
    p = data.draw(st.tuples(*[st.fractions(0, 8, max_denominator=3)] * n))
    assert all(f.contains(p) for f in facets) == oracles.in_upward_hull(p, vertices)


def test_vertices_are_points_not_in_hull_of_others():
    rng = random.Random(3)
    for _ in range(30):
        pts = list({tuple(rng.randint(0, 6) for _ in range(3)) for _ in range(6)})
        vertices, _ = upward_hull(pts)
        for p in pts:
            others = [q for q in pts if q != p]
            outside = not others or not oracles.in_upward_hull(p, others)
            assert (p in vertices) == outside


@pytest.mark.parametrize(
    "points, counts",
    [
        ([(4, 0), (1, 1), (0, 4)], {0: 3, 1: 2}),
        ([(2, 0), (0, 3)], {0: 2, 1: 1}),
        ([(1, 0, 0), (0, 1, 0), (0, 0, 1)], {0: 3, 1: 3, 2: 1}),
    ],
)
def test_face_counts(points, counts):
    faces = enumerate_faces(*upward_hull(points))
    got = {}
    for f in faces:
        got[f.dim] = got.get(f.dim, 0) + 1
    assert got == counts


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=2, max_size=4))
def test_simplex_faces_follow_binomials(exps):
    from math import comb

    n = len(exps)
    pts = [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(exps)]
    faces = enumerate_faces(*upward_hull(pts))
    for d in range(n):
        assert sum(1 for f in faces if f.dim == d) == comb(n, d + 1)


def test_faces_include_vertices_and_compact_facets():
    vertices, facets = upward_hull([(6, 0, 0), (0, 5, 0), (0, 0, 4), (1, 1, 1), (2, 2, 0)])
    faces = enumerate_faces(vertices, facets)
    assert {f.vertices[0] for f in faces if f.dim == 0} == set(vertices)
    compact = {f.normal for f in facets if all(c > 0 for c in f.normal)}
    assert {h.normal for f in faces if f.dim == 2 for h in f.normals if all(c > 0 for c in h.normal)} == compact


def _region(*rows):
    return HPolyhedron(len(rows[0][0]), tuple(HalfSpace(a, b) for a, b in rows))


def test_minimize_on_wedge():
    region = _region(((1, 0), 0), ((0, 1), 0), ((1, 1), 5), ((1, -1), 0))
    assert minimize_linear((1, 3), region) == (5, (5, 0))


def test_minimize_on_newton_region():
    _, facets = upward_hull([(2, 0), (0, 3)])
    assert minimize_linear((1, 1), HPolyhedron(2, facets)) == (2, (2, 0))


def test_minimize_empty_region():
    region = _region(((1, 0), 1), ((-1, 0), 0), ((0, 1), 0))
    with pytest.raises(EmptyRegion):
        minimize_linear((1, 1), region)


@settings(max_examples=40, deadline=None)
@given(points_2_3, st.data())
def test_minimize_matches_basis_enumeration_and_ignores_order(points, data):
    vertices, facets = upward_hull(points)
    n = len(points[0])
    cut = data.draw(st.tuples(*[st.integers(-2, 3)] * n))
    rhs = data.draw(st.integers(-3, 6))
    halfspaces = list(facets) + [HalfSpace(cut, rhs)] if any(cut) else list(facets)
    objective = data.draw(st.tuples(*[st.integers(0, 4)] * n).filter(lambda v: all(c > 0 for c in v)))
    expected = oracles.basis_lp(objective, [(h.normal, h.offset) for h in halfspaces], n)
    if expected is None:
        with pytest.raises(EmptyRegion):
            minimize_linear(objective, HPolyhedron(n, tuple(halfspaces)))
        return
    got = minimize_linear(objective, HPolyhedron(n, tuple(halfspaces)))
    assert got[0] == expected[0]
    assert tuple(Fraction(c) for c in got[1]) == expected[1]
    shuffled = halfspaces[:]
    random.Random(len(halfspaces)).shuffle(shuffled)
    assert minimize_linear(objective, HPolyhedron(n, tuple(shuffled))) == got


@pytest.mark.parametrize(
    "pts, volume",
    [
        ([(0, 0), (2, 0), (0, 3)], 3),
        ([(0, 0), (1, 0), (0, 1), (1, 1)], 1),
        # (2, 3) lies inside the triangle (0,0), (5,0), (0,6)
        ([(0, 0), (5, 0), (2, 3), (0, 6)], 15),
        ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], Fraction(1, 6)),
        ([(0, 0), (1, 1), (2, 2)], 0),
    ],
)
def test_polytope_volume(pts, volume):
    assert polytope_volume(pts) == volume


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(*[st.integers(0, 5)] * 3), min_size=4, max_size=8),
    st.permutations(range(3)),
    st.integers(1, 3),
)
def test_volume_permutation_and_scaling(pts, perm, s):
    v = polytope_volume(pts)
    assert polytope_volume([tuple(p[i] for i in perm) for p in pts]) == v
    assert polytope_volume([tuple(s * c for c in p) for p in pts]) == s**3 * v
