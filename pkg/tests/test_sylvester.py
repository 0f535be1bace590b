import random
from collections import defaultdict

from hybres.core import setup
from hybres.geometry import LatticePoint, lattice_points
from hybres.sampling import random_saturated_support
from hybres.sylvester import CoefficientSymbol, block_L, block_Ltilde, l_columns

L = LatticePoint


def test_L_example_entries(example):
    Lb = block_L(example.support, example.polygon)
    assert len(Lb) == 6 and len(Lb[0]) == 3
    assert Lb[0][0] == CoefficientSymbol(1, 1)
    assert Lb[1][0] == CoefficientSymbol(1, 2)
    assert [row[1].render() for row in Lb] == ["c[2][1]", "c[2][2]", "c[2][3]", "c[2][4]", "c[2][5]", "c[2][6]"]


def test_L_zero_outside_support():
    s = setup(random_saturated_support(random.Random(3), max_points=12))
    Lb = block_L(s.support, s.polygon)
    rows = lattice_points(s.polygon, 2, interior=True)
    for b, row in zip(rows, Lb):
        for (i, a), cell in zip(l_columns(s.polygon), row):
            if s.support.index_of(b - a) is None:
                assert cell is None


def test_Ltilde(example, triangle):
    Lt = block_Ltilde(example.support)
    assert [c.render() for c in Lt[0]] == [f"c[1][{a}]" for a in range(1, 7)]
    assert Lt[2][5] == CoefficientSymbol(3, 6)
    assert len(block_Ltilde(triangle.support)) == 3 and len(block_Ltilde(triangle.support)[0]) == 3


def _poly_mul(f, g):
    out = defaultdict(int)
    for p, a in f.items():
        for q, b in g.items():
            out[p + q] += a * b
    return out


def test_L_is_sylvester_map():
    """L @ (g1, g2, g3) equals the coefficients of f1 g1 + f2 g2 + f3 g3 on int(2Q)."""
    rng = random.Random(8)
    checked = 0
    while checked < 15:
        s = setup(random_saturated_support(rng, max_points=14))
        interior = lattice_points(s.polygon, 1, interior=True)
        if not interior:
            continue
        C = [[rng.randint(-9, 9) for _ in s.support.points] for _ in range(3)]
        G = [{a: rng.randint(-9, 9) for a in interior} for _ in range(3)]
        total = defaultdict(int)
        for i in range(3):
            f = {p: C[i][k] for k, p in enumerate(s.support.points)}
            for mono, c in _poly_mul(f, G[i]).items():
                total[mono] += c
        cols = l_columns(s.polygon)
        gvec = [G[i - 1][a] for i, a in cols]
        rows = lattice_points(s.polygon, 2, interior=True)
        for b, row in zip(rows, block_L(s.support, s.polygon)):
            val = sum(0 if cell is None else cell.evaluate(C) * g for cell, g in zip(row, gvec))
            assert val == total[b]
        # f_i g_i lands inside int(2Q) only
        assert set(m for m, c in total.items() if c) <= set(rows)
        checked += 1


def test_Ltilde_is_dual_of_psi0(example):
    """(Psi_0)^*: the dual of (c1, c2, c3) -> sum c_i f_i sends (y^a)^* to column a."""
    C = [[1, 2, 3, 4, 5, 6], [7, 8, 9, 10, 11, 12], [13, 14, 15, 16, 17, 18]]
    Lt = block_Ltilde(example.support)
    for a in range(6):
        assert [Lt[i][a].evaluate(C) for i in range(3)] == [C[i][a] for i in range(3)]
