"""Seeded random lattice polygons and saturated supports for property checks."""

from __future__ import annotations

import random

from .geometry import LatticePoint, Support, convex_hull, lattice_points, polygon_from_vertices


def random_lattice_polygon(rng: random.Random, box: int = 5, max_tries: int = 1000):
    """Hull of 3..8 uniform points in [-box, box]^2, retried until 2-dimensional."""
    for _ in range(max_tries):
        k = rng.randint(3, 8)
        pts = [LatticePoint(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(k)]
        hull = convex_hull(pts)
        if len(hull) >= 3:
            return polygon_from_vertices(hull)
    raise RuntimeError("could not sample a 2-dimensional polygon")


def random_saturated_support(rng: random.Random, max_points: int = 12, box: int = 3, shuffle: bool = True) -> Support:
    """Q ∩ Z^2 for a random lattice polygon with at most ``max_points`` points."""
    while True:
        poly = random_lattice_polygon(rng, box)
        pts = lattice_points(poly)
        if 3 <= len(pts) <= max_points:
            if shuffle:
                rng.shuffle(pts)
            return Support(tuple(pts))
