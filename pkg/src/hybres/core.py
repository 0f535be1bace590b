"""Hybrid matrix [[B, L], [L~, 0]]: assembly, evaluation and resultant checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bezout import BracketForm, bezout_block
from .errors import DegenerateBaseValue, DimensionMismatch, UnsupportedSupport
from .fan import FanPartition, choose_distinguished_cone, partition_fan
from .geometry import (
    LatticePoint,
    Polygon,
    Support,
    dense_simplex,
    normalized_area,
    polygon_from_support,
)
from .linalg import det3, determinant
from .sylvester import block_L, block_Ltilde, l_columns


@dataclass(frozen=True)
class ResultantOptions:
    vertex: Optional[LatticePoint] = None


@dataclass(frozen=True)
class Setup:
    support: Support
    polygon: Polygon
    partition: FanPartition


def setup(support: Support, options: Optional[ResultantOptions] = None) -> Setup:
    options = options or ResultantOptions()
    polygon = polygon_from_support(support)
    cone = choose_distinguished_cone(polygon, options.vertex)
    return Setup(support, polygon, partition_fan(polygon, cone))


@dataclass(frozen=True)
class HybridMatrix:
    """Cells are BracketForm (B), CoefficientSymbol (L, L~) or None (zero)."""

    cells: tuple
    row_labels: tuple
    col_labels: tuple
    n_bezout_rows: int
    n_support: int

    @property
    def size(self) -> int:
        return len(self.cells)

    def render(self) -> list:
        out = []
        for row in self.cells:
            out.append(["0" if c is None else c.render() for c in row])
        return out


def _label(p: LatticePoint) -> str:
    return f"({p.x},{p.y})"


def assemble(support: Support, polygon: Polygon, partition: FanPartition) -> HybridMatrix:
    B = bezout_block(support, polygon, partition)
    L = block_L(support, polygon)
    Lt = block_Ltilde(support)
    lcols = l_columns(polygon)
    r, n = B.shape
    assert r + 3 == n + len(lcols), "hybrid matrix is not square"

    cells = []
    for i in range(r):
        row = [e if e else None for e in B.entries[i]]
        cells.append(tuple(row + list(L[i])))
    for i in range(3):
        cells.append(tuple(list(Lt[i]) + [None] * len(lcols)))

    row_labels = tuple(_label(p) for p in B.rows) + ("f1", "f2", "f3")
    col_labels = tuple(_label(p) for p in support.points) + tuple(f"f{i}*{_label(a)}" for i, a in lcols)
    return HybridMatrix(
        cells=tuple(cells),
        row_labels=row_labels,
        col_labels=col_labels,
        n_bezout_rows=r,
        n_support=n,
    )


def _check_coeffs(coeffs: Sequence[Sequence], n: int) -> list:
    if len(coeffs) != 3 or any(len(row) != n for row in coeffs):
        raise DimensionMismatch(f"coefficients must be 3 x {n}")
    return [[Fraction(c) for c in row] for row in coeffs]


def bracket_value(coeffs: Sequence[Sequence], bracket: tuple):
    """[abc]: 3x3 minor of the coefficient matrix on 1-based columns a, b, c."""
    cols = [[coeffs[i][j - 1] for i in range(3)] for j in bracket]
    return det3(*cols)


def evaluate(matrix: HybridMatrix, coeffs: Sequence[Sequence]) -> list:
    C = _check_coeffs(coeffs, matrix.n_support)
    cache: dict = {}

    def minor(b):
        if b not in cache:
            cache[b] = bracket_value(C, b)
        return cache[b]

    out = []
    for row in matrix.cells:
        vals = []
        for cell in row:
            if cell is None:
                vals.append(Fraction(0))
            elif isinstance(cell, BracketForm):
                vals.append(Fraction(cell.evaluate(minor)))
            else:
                vals.append(cell.evaluate(C))
        out.append(vals)
    return out


def resultant_value(support: Support, coeffs: Sequence[Sequence], options: Optional[ResultantOptions] = None) -> Fraction:
    """Determinant of the evaluated hybrid matrix (the resultant up to a fixed sign)."""
    s = setup(support, options)
    return determinant(evaluate(assemble(s.support, s.polygon, s.partition), coeffs))


def degree_per_poly(support: Support) -> int:
    return normalized_area(polygon_from_support(support))


def random_coefficients(n: int, seed: int, low: int = -9, high: int = 9) -> list:
    rng = random.Random(seed)
    return [[Fraction(rng.randint(low, high)) for _ in range(n)] for _ in range(3)]


def monomial_value(point: LatticePoint, root: tuple) -> Fraction:
    x0, y0 = (Fraction(r) for r in root)
    return x0 ** point.x * y0 ** point.y


def planted_root_system(support: Support, root: tuple, rng_seed: int, low: int = -9, high: int = 9) -> list:
    """Random integer system with the coefficient at support point 1 solved so f_i(root) = 0."""
    x0, y0 = (Fraction(r) for r in root)
    if x0 == 0 or y0 == 0:
        raise ValueError("planted root must lie in the torus")
    rng = random.Random(rng_seed)
    vals = [monomial_value(p, (x0, y0)) for p in support.points]
    coeffs = []
    for _ in range(3):
        row = [Fraction(0)] + [Fraction(rng.randint(low, high)) for _ in support.points[1:]]
        row[0] = -sum(c * v for c, v in zip(row[1:], vals[1:])) / vals[0]
        coeffs.append(row)
    return coeffs


def evaluate_system(support: Support, coeffs: Sequence[Sequence], root: tuple) -> list:
    vals = [monomial_value(p, root) for p in support.points]
    return [sum(Fraction(c) * v for c, v in zip(row, vals)) for row in coeffs]


def scaling_degree_check(
    support: Support,
    coeffs: Sequence[Sequence],
    lam,
    i: int,
    options: Optional[ResultantOptions] = None,
) -> bool:
    """Scaling f_i by lam multiplies the resultant by lam**(2 Area(Q))."""
    lam = Fraction(lam)
    base = resultant_value(support, coeffs, options)
    if base == 0:
        raise DegenerateBaseValue("base resultant is zero")
    scaled = [list(row) for row in coeffs]
    scaled[i - 1] = [lam * Fraction(c) for c in scaled[i - 1]]
    return resultant_value(support, scaled, options) == lam ** degree_per_poly(support) * base


def _monomials(degree: int) -> list:
    return [(a, b, degree - a - b) for a in range(degree, -1, -1) for b in range(degree - a, -1, -1)]


def macaulay_dense_oracle(d: int, coeffs: Sequence[Sequence], support: Optional[Support] = None) -> Fraction:
    """Classical Macaulay quotient for three ternary forms of degree d in {1, 2}.

    The support point (i, j) is the monomial x^i y^j z^(d-i-j). Rows of the
    degree 3d-2 matrix are x^m * f_v, with v the first variable whose d-th
    power divides the row monomial; the extraneous factor is the minor on
    monomials divisible by at least two d-th powers.
    """
    if d not in (1, 2):
        raise UnsupportedSupport("dense oracle implemented for d = 1, 2 only")
    dense = dense_simplex(d)
    support = support or dense
    if set(support.points) != set(dense.points):
        raise UnsupportedSupport("support is not the saturated d-simplex")
    C = _check_coeffs(coeffs, len(support))

    terms = [((p.x, p.y, d - p.x - p.y), k) for k, p in enumerate(support.points)]
    D = 3 * d - 2
    monos = _monomials(D)
    col = {m: i for i, m in enumerate(monos)}
    M = []
    for m in monos:
        v = next(t for t in range(3) if m[t] >= d)
        shift = list(m)
        shift[v] -= d
        row = [Fraction(0)] * len(monos)
        for e, k in terms:
            row[col[tuple(s + x for s, x in zip(shift, e))]] += C[v][k]
        M.append(row)
    extra = [i for i, m in enumerate(monos) if sum(1 for x in m if x >= d) >= 2]
    E = [[M[i][j] for j in extra] for i in extra]
    denom = determinant(E)
    if denom == 0:
        raise DegenerateBaseValue("extraneous Macaulay minor vanishes")
    return determinant(M) / denom

