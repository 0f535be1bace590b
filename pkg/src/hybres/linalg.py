"""Exact determinants over Q."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _clear_denominators(matrix: Sequence[Sequence]) -> tuple:
    rows = []
    scale = 1
    for row in matrix:
        row = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * m) for x in row])
        scale *= m
    return rows, scale


def bareiss_int(rows: list) -> int:
    """Fraction-free Gaussian elimination on an integer matrix (mutated in place).

    Pivots on the first nonzero entry in the column; every division is exact.
    """
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix of ints/Fractions."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    rows, scale = _clear_denominators(matrix)
    return Fraction(bareiss_int(rows), scale)


def det3(a, b, c) -> object:
    """Determinant of the 3x3 matrix with columns a, b, c."""
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - b[0] * (a[1] * c[2] - a[2] * c[1])
        + c[0] * (a[1] * b[2] - a[2] * b[1])
    )
