"""Pure-coefficient blocks L (rows int(2Q), columns (f_i, int(Q))) and L~ (3 x N)."""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Polygon, Support, lattice_points


@dataclass(frozen=True, order=True)
class CoefficientSymbol:
    """C_{i,a}: coefficient of the a-th support monomial in f_i (both 1-based)."""

    poly_index: int
    support_index: int

    def __post_init__(self):
        if self.poly_index not in (1, 2, 3) or self.support_index < 1:
            raise ValueError(f"bad coefficient symbol c[{self.poly_index}][{self.support_index}]")

    def render(self) -> str:
        return f"c[{self.poly_index}][{self.support_index}]"

    def evaluate(self, coeffs):
        return coeffs[self.poly_index - 1][self.support_index - 1]


def l_columns(polygon: Polygon) -> list:
    """Column labels (i, a) of L: polynomial first, then interior points of Q."""
    interior = lattice_points(polygon, 1, interior=True)
    return [(i, a) for i in (1, 2, 3) for a in interior]


def block_L(support: Support, polygon: Polygon) -> list:
    """Entry (b, (f_i, a)) is C_{i, b-a} when b - a is in the support, else None."""
    rows = lattice_points(polygon, 2, interior=True)
    cols = l_columns(polygon)
    out = []
    for b in rows:
        row = []
        for i, a in cols:
            idx = support.index_of(b - a)
            row.append(None if idx is None else CoefficientSymbol(i, idx))
        out.append(row)
    return out


def block_Ltilde(support: Support) -> list:
    return [[CoefficientSymbol(i, a) for a in range(1, len(support) + 1)] for i in (1, 2, 3)]
