"""Distinguished cone choice and the R1/R2/R3 split of the normal fan."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import NotAVertex
from .geometry import LatticePoint, Polygon


@dataclass(frozen=True)
class RefinedRay:
    normal: tuple
    offset: Fraction
    cone: tuple  # 1-based facet indices (i, j)
    coefficients: tuple  # (c1, c2), both > 0
    primitive: bool

    def value(self, point: LatticePoint, k: int = 1) -> Fraction:
        return point.dot(self.normal) + k * self.offset


@dataclass(frozen=True)
class FanPartition:
    """Ray indices are 1-based; the refined ray, if any, has index s + 1."""

    vertex_p: LatticePoint
    eta1_index: int
    eta2_index: int
    R1: tuple
    R2: tuple
    R3: tuple
    refined: Optional[RefinedRay] = None

    @property
    def num_rays(self) -> int:
        return len(self.R1) + len(self.R2) + len(self.R3)

    def to_json(self) -> dict:
        refined = None
        if self.refined is not None:
            r = self.refined
            refined = {
                "index": self.num_rays,
                "normal": list(r.normal),
                "offset": str(r.offset),
                "cone": list(r.cone),
                "coefficients": [str(c) for c in r.coefficients],
                "primitive": r.primitive,
            }
        return {
            "vertex": self.vertex_p.as_list(),
            "eta1": self.eta1_index,
            "eta2": self.eta2_index,
            "R1": list(self.R1),
            "R2": list(self.R2),
            "R3": list(self.R3),
            "refined": refined,
        }


def basis_coefficients(v, b1, b2) -> tuple:
    """Exact (c1, c2) with v = c1*b1 + c2*b2."""
    det = b1[0] * b2[1] - b1[1] * b2[0]
    if det == 0:
        raise ValueError("basis vectors are parallel")
    c1 = Fraction(v[0] * b2[1] - v[1] * b2[0], det)
    c2 = Fraction(b1[0] * v[1] - b1[1] * v[0], det)
    return c1, c2


def incident_facets(polygon: Polygon, vertex: LatticePoint) -> tuple:
    """(eta1, eta2) facet indices at a vertex, eta2 following eta1 counterclockwise."""
    pos = polygon.vertex_index(vertex)
    if pos is None:
        raise NotAVertex(f"{vertex!r} is not a vertex of the polygon")
    s = polygon.num_facets
    return ((pos - 1) % s) + 1, pos + 1


def _split(polygon: Polygon, i1: int, i2: int) -> tuple:
    e1 = polygon.facet(i1).normal
    e2 = polygon.facet(i2).normal
    R1, R2, R3 = [], [], []
    for f in polygon.facets:
        if f.index == i1:
            R1.append(f.index)
            continue
        if f.index == i2:
            R2.append(f.index)
            continue
        c1, c2 = basis_coefficients(f.normal, e1, e2)
        if c1 < 0 and c2 < 0:
            R3.append(f.index)
        elif c1 >= 0 and c2 <= 0:
            R1.append(f.index)
        elif c1 <= 0 and c2 >= 0:
            R2.append(f.index)
        else:
            raise AssertionError(f"ray {f.index} lies inside the cone of a vertex")
    return R1, R2, R3


def choose_distinguished_cone(polygon: Polygon, override_vertex: Optional[LatticePoint] = None) -> tuple:
    """Return (p, eta1_index, eta2_index).

    Without an override, the lexicographically smallest vertex whose split
    has a non-empty R3 is preferred; if every vertex needs refinement the
    smallest vertex is used.
    """
    if override_vertex is not None:
        i1, i2 = incident_facets(polygon, override_vertex)
        return override_vertex, i1, i2
    candidates = sorted(polygon.vertices)
    for v in candidates:
        i1, i2 = incident_facets(polygon, v)
        if _split(polygon, i1, i2)[2]:
            return v, i1, i2
    v = candidates[0]
    return (v,) + incident_facets(polygon, v)


def refine(polygon: Polygon, i1: int, i2: int) -> RefinedRay:
    e1 = polygon.facet(i1).normal
    e2 = polygon.facet(i2).normal
    eta = (-e1[0] - e2[0], -e1[1] - e2[1])
    s = polygon.num_facets
    for f in polygon.facets:
        g = polygon.facet(f.index % s + 1)
        c1, c2 = basis_coefficients(eta, f.normal, g.normal)
        if c1 > 0 and c2 > 0:
            return RefinedRay(
                normal=eta,
                offset=c1 * f.offset + c2 * g.offset,
                cone=(f.index, g.index),
                coefficients=(c1, c2),
                primitive=gcd(*eta) == 1,
            )
    raise AssertionError("refined ray is not interior to any cone of the fan")


def partition_fan(polygon: Polygon, cone: tuple) -> FanPartition:
    p, i1, i2 = cone
    R1, R2, R3 = _split(polygon, i1, i2)
    refined = None
    if not R3:
        refined = refine(polygon, i1, i2)
        R3 = [polygon.num_facets + 1]
    return FanPartition(
        vertex_p=p,
        eta1_index=i1,
        eta2_index=i2,
        R1=tuple(R1),
        R2=tuple(R2),
        R3=tuple(R3),
        refined=refined,
    )


def ray_normal(polygon: Polygon, partition: FanPartition, index: int) -> tuple:
    if index <= polygon.num_facets:
        return polygon.facet(index).normal
    return partition.refined.normal
