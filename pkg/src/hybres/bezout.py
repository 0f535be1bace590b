"""The Bezout block B: bracket forms indexed by int(2Q) x (Q ∩ Z^2)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import PointNotInSupportHull
from .fan import FanPartition
from .geometry import LatticePoint, Polygon, Support, homogenize, lattice_points


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def canonical_bracket(u: int, v: int, w: int) -> Optional[tuple]:
    """(sign, (a, b, c)) with a < b < c, or None when two indices coincide."""
    if u == v or v == w or u == w:
        return None
    return permutation_sign((u, v, w)), tuple(sorted((u, v, w)))


def _render_bracket(b: tuple) -> str:
    if max(b) < 10:
        return "[" + "".join(str(i) for i in b) + "]"
    return "[" + ",".join(str(i) for i in b) + "]"


class BracketForm:
    """Integer combination of canonical brackets; immutable after construction."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for b, c in (terms or {}).items():
            if c:
                clean[tuple(b)] = c
        self._terms = clean

    @classmethod
    def from_triples(cls, triples) -> "BracketForm":
        acc: dict = {}
        for t in triples:
            canon = canonical_bracket(*t)
            if canon is None:
                continue
            sign, b = canon
            acc[b] = acc.get(b, 0) + sign
        return cls(acc)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BracketForm):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "BracketForm") -> "BracketForm":
        acc = dict(self._terms)
        for b, c in other._terms.items():
            acc[b] = acc.get(b, 0) + c
        return BracketForm(acc)

    def __neg__(self) -> "BracketForm":
        return BracketForm({b: -c for b, c in self._terms.items()})

    def evaluate(self, minor) -> object:
        """``minor(bracket)`` supplies each 3x3 determinant."""
        return sum((c * minor(b) for b, c in sorted(self._terms.items())), 0)

    def render(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for b, c in sorted(self._terms.items()):
            mag = "" if abs(c) == 1 else str(abs(c))
            if not out:
                out = ("-" if c < 0 else "") + mag + _render_bracket(b)
            else:
                out += ("-" if c < 0 else "+") + mag + _render_bracket(b)
        return out

    @classmethod
    def parse(cls, text: str) -> "BracketForm":
        """Inverse of ``render`` (for fixtures); accepts '[126]-[234]' style."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        acc: dict = {}
        for sign, mag, body in re.findall(r"([+-]?)(\d*)\[([\d,]+)\]", text):
            idx = tuple(int(i) for i in (body.split(",") if "," in body else body))
            c = (-1 if sign == "-" else 1) * (int(mag) if mag else 1)
            canon = canonical_bracket(*idx)
            if canon is None:
                continue
            s, b = canon
            acc[b] = acc.get(b, 0) + s * c
        return cls(acc)

    def __repr__(self) -> str:
        return f"BracketForm({self.render()})"


def ray_coordinates(support: Support, polygon: Polygon, partition: FanPartition) -> list:
    """Level-1 homogenized coordinates of each support point, refined ray last."""
    return [homogenize(p, polygon, 1, partition.refined) for p in support.points]


def _point_coords(point: LatticePoint, polygon: Polygon, partition: FanPartition) -> tuple:
    if not polygon.contains(point):
        raise PointNotInSupportHull(f"{point!r} is not a lattice point of Q")
    return homogenize(point, polygon, 1, partition.refined)


def enumerate_F_alpha(
    support: Support,
    polygon: Polygon,
    partition: FanPartition,
    alpha: LatticePoint,
    distinct: bool = True,
) -> list:
    """Ordered index triples (u, v, w) (1-based) satisfying the Delta_Q inequalities.

    With a = homogenized alpha and ray sets R1, R2, R3:
        all i in R1: u_i + v_i + w_i > a_i,   some i in R1: v_i + w_i <= a_i,
        all j in R2: v_j + w_j > a_j,         some j in R2: w_j <= a_j,
        all k in R3: w_k > a_k.
    Triples with a repeated index carry a zero bracket and are dropped
    unless ``distinct=False``. Returned in lexicographic order.
    """
    a = _point_coords(alpha, polygon, partition)
    H = ray_coordinates(support, polygon, partition)
    R1 = [i - 1 for i in partition.R1]
    R2 = [j - 1 for j in partition.R2]
    R3 = [k - 1 for k in partition.R3]
    n = len(H)

    ws = [
        w for w in range(n)
        if all(H[w][k] > a[k] for k in R3) and any(H[w][j] <= a[j] for j in R2)
    ]
    out = []
    for w in ws:
        hw = H[w]
        for v in range(n):
            hv = H[v]
            if not all(hv[j] + hw[j] > a[j] for j in R2):
                continue
            if not any(hv[i] + hw[i] <= a[i] for i in R1):
                continue
            for u in range(n):
                hu = H[u]
                if distinct and (u == v or u == w or v == w):
                    continue
                if all(hu[i] + hv[i] + hw[i] > a[i] for i in R1):
                    out.append((u + 1, v + 1, w + 1))
    out.sort()
    return out


def delta_q_column(support: Support, polygon: Polygon, partition: FanPartition, alpha: LatticePoint) -> dict:
    """Map from row point u+v+w-alpha (in int(2Q)) to its bracket form; zero rows omitted."""
    groups: dict = {}
    for u, v, w in enumerate_F_alpha(support, polygon, partition, alpha):
        row = support.point(u) + support.point(v) + support.point(w) - alpha
        # row landing follows from the inequalities; a failure is a bug
        assert polygon.contains(row, 2, interior=True), (alpha, (u, v, w), row)
        groups.setdefault(row, []).append((u, v, w))
    column = {}
    for row, triples in groups.items():
        form = BracketForm.from_triples(triples)
        if form:
            column[row] = form
    return column


@dataclass(frozen=True)
class BezoutBlock:
    rows: tuple  # int(2Q), canonical order
    columns: tuple  # support order
    entries: tuple  # rows x columns of BracketForm

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.columns)


def bezout_block(support: Support, polygon: Polygon, partition: FanPartition) -> BezoutBlock:
    rows = tuple(lattice_points(polygon, 2, interior=True))
    cols = [delta_q_column(support, polygon, partition, alpha) for alpha in support.points]
    zero = BracketForm()
    entries = tuple(tuple(col.get(r, zero) for col in cols) for r in rows)
    return BezoutBlock(rows=rows, columns=tuple(support.points), entries=entries)
