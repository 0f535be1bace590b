import random
from fractions import Fraction

import pytest
from hypothesis import settings

from hybres.core import setup
from hybres.geometry import dense_simplex, example_support, unit_square, unit_triangle

settings.register_profile("hybres", deadline=None, max_examples=100, derandomize=True)
settings.load_profile("hybres")


@pytest.fixture
def example():
    return setup(example_support())


@pytest.fixture
def square():
    return setup(unit_square())


@pytest.fixture
def triangle():
    return setup(unit_triangle())


@pytest.fixture
def simplex2():
    return setup(dense_simplex(2))


def cofactor_det(m):
    """Laplace expansion along the first row; independent of the Bareiss path."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * Fraction(m[0][j]) * cofactor_det(minor)
    return total


def hull_contains(vertices, x, y, scale=1, strict=False):
    """Point-in-convex-polygon by cross products against scaled ccw vertices."""
    vs = [(scale * v.x, scale * v.y) for v in vertices]
    for (ax, ay), (bx, by) in zip(vs, vs[1:] + vs[:1]):
        cross = (bx - ax) * (y - ay) - (by - ay) * (x - ax)
        if cross < 0 or (strict and cross == 0):
            return False
    return True


@pytest.fixture
def rng():
    return random.Random(20021)
