"""Lattice polygons: hull, facet data, lattice points of kQ and homogenization.

A polygon is stored as

    Q = { m : <m, eta_i> >= -a_i }

with primitive inner normals ``eta_i`` listed counterclockwise. Lattice
points are returned in graded-lex order (x + y ascending, then x
descending) unless a different ``key`` is passed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import (
    DegenerateSupport,
    NonSaturatedSupport,
    PointOutsidePolytope,
)


@dataclass(frozen=True, order=True)
class LatticePoint:
    x: int
    y: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    def scale(self, k: int) -> "LatticePoint":
        return LatticePoint(k * self.x, k * self.y)

    def dot(self, v: Sequence[int]) -> int:
        return self.x * v[0] + self.y * v[1]

    def as_list(self) -> list:
        return [self.x, self.y]

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


ORIGIN = LatticePoint(0, 0)


def graded_lex_key(p: LatticePoint):
    return (p.x + p.y, -p.x)


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: Fraction
    index: int  # 1-based, counterclockwise

    def value(self, point: LatticePoint, k: int = 1):
        """``<point, eta> + k * a``; zero on the facet of kQ."""
        return point.dot(self.normal) + k * self.offset


@dataclass(frozen=True)
class Polygon:
    """Counterclockwise vertices; ``vertices[i]`` is the start of ``facets[i]``."""

    vertices: tuple
    facets: tuple

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def facet(self, index: int) -> Facet:
        return self.facets[index - 1]

    def contains(self, point: LatticePoint, k: int = 1, interior: bool = False) -> bool:
        if interior:
            return all(f.value(point, k) > 0 for f in self.facets)
        return all(f.value(point, k) >= 0 for f in self.facets)

    def vertex_index(self, point: LatticePoint) -> Optional[int]:
        try:
            return self.vertices.index(point)
        except ValueError:
            return None


@dataclass(frozen=True)
class Support:
    """Exponent set A. Input order fixes the 1-based monomial numbering."""

    points: tuple

    def __post_init__(self):
        pts = tuple(p if isinstance(p, LatticePoint) else LatticePoint(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise DegenerateSupport("support points must be pairwise distinct")

    @classmethod
    def of(cls, pairs: Iterable) -> "Support":
        return cls(tuple(LatticePoint(int(a), int(b)) for a, b in pairs))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def index_of(self, point: LatticePoint) -> Optional[int]:
        """1-based index, or None."""
        try:
            return self.points.index(point) + 1
        except ValueError:
            return None

    def point(self, index: int) -> LatticePoint:
        return self.points[index - 1]


def _cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Iterable[LatticePoint]) -> list:
    """Strict counterclockwise hull vertices (monotone chain, collinear dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _first_facet_position(normals: list) -> int:
    if (0, 1) in normals:
        return normals.index((0, 1))
    return normals.index(min(normals))


def polygon_from_vertices(hull: Sequence[LatticePoint]) -> Polygon:
    hull = list(hull)
    if len(hull) < 3:
        raise DegenerateSupport("support is not 2-dimensional (hull has fewer than 3 vertices)")
    normals = []
    for i, v in enumerate(hull):
        w = hull[(i + 1) % len(hull)]
        dx, dy = w.x - v.x, w.y - v.y
        g = gcd(dx, dy)
        # inner normal of a counterclockwise edge points to its left
        normals.append((-dy // g, dx // g))
    start = _first_facet_position(normals)
    hull = hull[start:] + hull[:start]
    normals = normals[start:] + normals[:start]
    facets = tuple(
        Facet(normal=n, offset=Fraction(-v.dot(n)), index=i + 1)
        for i, (v, n) in enumerate(zip(hull, normals))
    )
    return Polygon(vertices=tuple(hull), facets=facets)


def lattice_points(polygon: Polygon, k: int = 1, interior: bool = False, key=graded_lex_key) -> list:
    """All lattice points of kQ (or of its interior), sorted by ``key``."""
    if k < 1:
        raise ValueError("scale must be a positive integer")
    xs = [v.x for v in polygon.vertices]
    ys = [v.y for v in polygon.vertices]
    out = [
        LatticePoint(x, y)
        for x in range(k * min(xs), k * max(xs) + 1)
        for y in range(k * min(ys), k * max(ys) + 1)
        if polygon.contains(LatticePoint(x, y), k, interior)
    ]
    if key is not None:
        out.sort(key=key)
    return out


def _affine_lattice_index(points: Sequence[LatticePoint]) -> int:
    """gcd of 2x2 minors of the difference vectors; 1 iff the points affinely span Z^2."""
    base = points[0]
    diffs = [p - base for p in points[1:]]
    g = 0
    for i, a in enumerate(diffs):
        for b in diffs[i + 1:]:
            g = gcd(g, a.x * b.y - a.y * b.x)
            if g == 1:
                return 1
    return g


def missing_hull_points(support: Support) -> list:
    hull = convex_hull(support.points)
    if len(hull) < 3:
        raise DegenerateSupport("support is collinear or has fewer than 3 points")
    poly = polygon_from_vertices(hull)
    present = set(support.points)
    return [p for p in lattice_points(poly) if p not in present]


def polygon_from_support(support: Support) -> Polygon:
    """Hull of a saturated, affinely spanning support.

    Raises DegenerateSupport for collinear input and NonSaturatedSupport
    (carrying the missing points) when the support is not Q ∩ Z^2.
    """
    missing = missing_hull_points(support)
    if missing:
        raise NonSaturatedSupport(missing)
    if _affine_lattice_index(support.points) != 1:
        raise DegenerateSupport("support does not affinely span Z^2")
    return polygon_from_vertices(convex_hull(support.points))


def homogenize(point: LatticePoint, polygon: Polygon, k: int = 1, refined=None) -> tuple:
    """Homogenized coordinates ``<point, eta_i> + k a_i`` of a point of kQ.

    Genuine coordinates are ints; if ``refined`` (a RefinedRay) is given its
    coordinate is appended as a Fraction.
    """
    coords = [f.value(point, k) for f in polygon.facets]
    if any(c < 0 for c in coords):
        raise PointOutsidePolytope(f"{point!r} is not in {k}Q")
    coords = [int(c) for c in coords]
    if refined is not None:
        coords.append(point.dot(refined.normal) + k * refined.offset)
    return tuple(coords)


def normalized_area(polygon: Polygon) -> int:
    """Twice the Euclidean area (shoelace)."""
    vs = polygon.vertices
    twice = sum(vs[i].x * vs[(i + 1) % len(vs)].y - vs[(i + 1) % len(vs)].x * vs[i].y for i in range(len(vs)))
    return abs(twice)


def squareness_counts(polygon: Polygon) -> dict:
    """Counts entering ``3 + #int(2Q) = #Q + 3 #int(Q)``."""
    n_q = len(lattice_points(polygon, 1, key=None))
    n_int_q = len(lattice_points(polygon, 1, interior=True, key=None))
    n_int_2q = len(lattice_points(polygon, 2, interior=True, key=None))
    return {
        "Q": n_q,
        "int_Q": n_int_q,
        "int_2Q": n_int_2q,
        "rows": 3 + n_int_2q,
        "cols": n_q + 3 * n_int_q,
    }


def unit_triangle() -> Support:
    return Support.of([(0, 0), (1, 0), (0, 1)])


def unit_square() -> Support:
    return Support.of([(0, 0), (1, 0), (0, 1), (1, 1)])


def dense_simplex(d: int) -> Support:
    """Saturated support of d times the unit triangle, graded-lex order."""
    pts = [LatticePoint(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    pts.sort(key=graded_lex_key)
    return Support(tuple(pts))


def example_support() -> Support:
    """Pentagon support with monomials 1, x, y, xy, x^2y, xy^2 in that order."""
    return Support.of([(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
