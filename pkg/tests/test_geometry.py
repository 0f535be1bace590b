from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import hull_contains
from hybres.errors import DegenerateSupport, NonSaturatedSupport, PointOutsidePolytope
from hybres.fan import RefinedRay
from hybres.geometry import (
    LatticePoint,
    Support,
    convex_hull,
    dense_simplex,
    example_support,
    homogenize,
    lattice_points,
    normalized_area,
    polygon_from_support,
    polygon_from_vertices,
    squareness_counts,
    unit_square,
    unit_triangle,
)

L = LatticePoint


def facet_set(poly):
    return {(f.normal, f.offset) for f in poly.facets}


def test_example_facets():
    poly = polygon_from_support(example_support())
    assert facet_set(poly) == {
        ((0, 1), 0),
        ((-1, 1), 1),
        ((-1, -1), 3),
        ((1, -1), 1),
        ((1, 0), 0),
    }
    # every vertex satisfies every half-plane, tight on exactly two
    for v in poly.vertices:
        vals = [f.value(v) for f in poly.facets]
        assert all(x >= 0 for x in vals)
        assert sum(x == 0 for x in vals) == 2


def test_unit_triangle_facets():
    poly = polygon_from_support(unit_triangle())
    assert facet_set(poly) == {((0, 1), 0), ((1, 0), 0), ((-1, -1), 1)}


def test_facet_numbering_starts_at_upward_normal_and_runs_ccw():
    poly = polygon_from_support(example_support())
    assert [f.normal for f in poly.facets] == [(0, 1), (-1, 1), (-1, -1), (1, -1), (1, 0)]
    assert [f.index for f in poly.facets] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("pts", [[(0, 0), (1, 0)], [(0, 0), (1, 1), (2, 2), (3, 3)], [(4, 4)]])
def test_degenerate_support(pts):
    with pytest.raises(DegenerateSupport):
        polygon_from_support(Support.of(pts))


def test_non_saturated_support_reports_missing():
    with pytest.raises(NonSaturatedSupport) as exc:
        polygon_from_support(Support.of([(0, 0), (2, 0), (0, 2)]))
    assert set(exc.value.missing) == {L(1, 0), L(0, 1), L(1, 1)}


def test_duplicate_points_rejected():
    with pytest.raises(DegenerateSupport):
        Support.of([(0, 0), (0, 0), (1, 0), (0, 1)])


def test_lattice_points_example():
    poly = polygon_from_support(example_support())
    assert lattice_points(poly, 1) == [L(0, 0), L(1, 0), L(0, 1), L(1, 1), L(2, 1), L(1, 2)]
    assert lattice_points(poly, 1, interior=True) == [L(1, 1)]
    assert lattice_points(poly, 2, interior=True) == [L(1, 1), L(2, 1), L(1, 2), L(2, 2), L(3, 2), L(2, 3)]


def test_unit_triangle_2q_has_no_interior():
    poly = polygon_from_support(unit_triangle())
    assert lattice_points(poly, 2, interior=True) == []


def _brute(poly, k, interior):
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    return {
        L(x, y)
        for x in range(k * min(xs) - 1, k * max(xs) + 2)
        for y in range(k * min(ys) - 1, k * max(ys) + 2)
        if hull_contains(poly.vertices, x, y, k, strict=interior)
    }


polygons = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=8
).map(lambda pts: convex_hull(L(*p) for p in pts)).filter(lambda h: len(h) >= 3).map(polygon_from_vertices)


@given(polygons, st.integers(1, 3), st.booleans())
def test_lattice_points_match_brute_force(poly, k, interior):
    assert set(lattice_points(poly, k, interior)) == _brute(poly, k, interior)


@given(polygons)
def test_squareness_identity(poly):
    c = squareness_counts(poly)
    assert 3 + c["int_2Q"] == c["Q"] + 3 * c["int_Q"]


@given(polygons, st.integers(1, 3))
def test_homogenization_nonnegative_and_zero_on_facets(poly, k):
    for p in lattice_points(poly, k, key=None):
        coords = homogenize(p, poly, k)
        assert all(c >= 0 for c in coords)
        for f, c in zip(poly.facets, coords):
            # zero exactly on the facet line of kQ
            on_line = p.dot(f.normal) == -k * f.offset
            assert (c == 0) == on_line


@given(polygons)
def test_saturated_support_reproduced(poly):
    pts = lattice_points(poly)
    support = Support(tuple(reversed(pts)))
    poly2 = polygon_from_support(support)
    assert set(lattice_points(poly2)) == set(support.points)


@given(polygons)
def test_interior_subset_and_minkowski_containment(poly):
    assert set(lattice_points(poly, 2, interior=True)) <= set(lattice_points(poly, 2))
    q1 = lattice_points(poly, 1, key=None)
    q2 = set(lattice_points(poly, 2, key=None))
    q3 = set(lattice_points(poly, 3, key=None))
    assert {a + b for a in q1 for b in q1} <= q2
    assert {a + b for a in q1 for b in q2} <= q3


def test_homogenize_examples():
    poly = polygon_from_support(example_support())
    assert homogenize(L(1, 1), poly) == (1, 1, 1, 1, 1)
    for v in poly.vertices:
        assert sum(c == 0 for c in homogenize(v, poly)) == 2
    with pytest.raises(PointOutsidePolytope):
        homogenize(L(3, 3), poly)


def test_homogenize_refined_coordinate():
    poly = polygon_from_support(unit_square())
    ray = RefinedRay(normal=(-1, -1), offset=Fraction(2), cone=(2, 3), coefficients=(1, 1), primitive=True)
    coords = homogenize(L(0, 0), poly, 1, ray)
    assert coords[-1] == 2
    assert len(coords) == poly.num_facets + 1


@pytest.mark.parametrize(
    "support, area",
    [(example_support(), 5), (unit_triangle(), 1), (unit_square(), 2), (dense_simplex(2), 4)],
)
def test_normalized_area(support, area):
    assert normalized_area(polygon_from_support(support)) == area
