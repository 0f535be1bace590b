"""Exterior-algebra check of the Bezout block.

Elements of S ⊗ ΛV are stored as ``{(level, point, generators): coeff}``.
A monomial of S is named by the lattice point it homogenizes at a known
level, so the refined ray never produces fractional exponents. The
interior shift by (1, ..., 1) is implicit in the level at which a term is
read:

* Delta_Q(n_alpha) has terms (2, u+v+w-alpha) in int(2Q);
* J0 has terms (3, u+v+w) read in int(3Q);
* e_alpha carries no monomial, so it is (0, origin).

Both sides of ``Delta_Q(n_alpha) ∧ m == J0 ∧ e_alpha`` then land at level 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bezout import enumerate_F_alpha, permutation_sign, ray_coordinates
from .fan import FanPartition
from .geometry import ORIGIN, LatticePoint, Polygon, Support, homogenize


class ExteriorElement:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, level: int, point: LatticePoint, generators, coeff: int = 1) -> "ExteriorElement":
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            return cls()
        sign = permutation_sign(gens)
        return cls({(level, point, tuple(sorted(gens))): sign * coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExteriorElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return ExteriorElement(acc)

    def __neg__(self) -> "ExteriorElement":
        return ExteriorElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "ExteriorElement") -> "ExteriorElement":
        return self + (-other)

    def wedge(self, other: "ExteriorElement") -> "ExteriorElement":
        acc: dict = {}
        for (la, pa, ga), ca in self._terms.items():
            sa = set(ga)
            for (lb, pb, gb), cb in other._terms.items():
                if sa.intersection(gb):
                    continue
                merged = ga + gb
                key = (la + lb, pa + pb, tuple(sorted(merged)))
                acc[key] = acc.get(key, 0) + permutation_sign(merged) * ca * cb
        return ExteriorElement(acc)

    __xor__ = wedge

    def __repr__(self) -> str:
        if not self._terms:
            return "ExteriorElement(0)"
        parts = [f"{c:+d}*y{lvl}{p!r}e{list(g)}" for (lvl, p, g), c in sorted(self._terms.items(), key=str)]
        return "ExteriorElement(" + " ".join(parts) + ")"


def element_m(support: Support) -> ExteriorElement:
    """m = sum over the support of y^alpha ⊗ e_alpha."""
    out = ExteriorElement()
    for i, p in enumerate(support.points, start=1):
        out = out + ExteriorElement.basis(1, p, (i,))
    return out


def e_generator(support: Support, alpha: LatticePoint) -> ExteriorElement:
    return ExteriorElement.basis(0, ORIGIN, (support.index_of(alpha),))


@dataclass(frozen=True)
class MuPartition:
    mu1: tuple  # off facet eta1
    mu2: tuple  # on facet eta1, off facet eta2
    mu3: tuple  # the vertex p


def mu_partition(support: Support, polygon: Polygon, partition: FanPartition) -> MuPartition:
    f1 = polygon.facet(partition.eta1_index)
    f2 = polygon.facet(partition.eta2_index)
    mu1, mu2, mu3 = [], [], []
    for i, p in enumerate(support.points, start=1):
        if f1.value(p) >= 1:
            mu1.append(i)
        elif f2.value(p) >= 1:
            mu2.append(i)
        else:
            mu3.append(i)
    assert len(mu3) == 1 and support.point(mu3[0]) == partition.vertex_p
    return MuPartition(tuple(mu1), tuple(mu2), tuple(mu3))


def j0_element(support: Support, polygon: Polygon, mu: MuPartition) -> ExteriorElement:
    """J0 = (M1/y1) ∧ (M2/y2) ∧ (M3/(y3...ys)), terms at level 3."""
    acc = ExteriorElement()
    for u in mu.mu1:
        for v in mu.mu2:
            for w in mu.mu3:
                pt = support.point(u) + support.point(v) + support.point(w)
                acc = acc + ExteriorElement.basis(3, pt, (u, v, w))
    return acc


def j0_wedge_e_alpha_direct(j0: ExteriorElement, support: Support, alpha: LatticePoint) -> ExteriorElement:
    return j0.wedge(e_generator(support, alpha))


def j0_wedge_e_alpha_lemma(support: Support, polygon: Polygon, partition: FanPartition, alpha: LatticePoint) -> ExteriorElement:
    """J0 ∧ e_alpha as the signed sum over (t, u, v, w) in A^4 with

        all R1: t+u+v+w > a     some R1: t+v+w <= a
        all R2: t+v+w > a       some R2: t+w <= a
        all R3: w > a           some R3: t <= a

    of y^(t+u+v+w-alpha-1) ⊗ e_u ∧ e_v ∧ e_w ∧ e_t.
    """
    a = homogenize(alpha, polygon, 1, partition.refined)
    H = ray_coordinates(support, polygon, partition)
    R1 = [i - 1 for i in partition.R1]
    R2 = [j - 1 for j in partition.R2]
    R3 = [k - 1 for k in partition.R3]
    n = len(H)
    acc: dict = {}
    for w in range(n):
        hw = H[w]
        if not all(hw[k] > a[k] for k in R3):
            continue
        for t in range(n):
            ht = H[t]
            if t == w or not any(ht[k] <= a[k] for k in R3):
                continue
            if not any(ht[j] + hw[j] <= a[j] for j in R2):
                continue
            for v in range(n):
                hv = H[v]
                if v in (t, w):
                    continue
                if not all(ht[j] + hv[j] + hw[j] > a[j] for j in R2):
                    continue
                if not any(ht[i] + hv[i] + hw[i] <= a[i] for i in R1):
                    continue
                for u in range(n):
                    if u in (t, v, w):
                        continue
                    hu = H[u]
                    if not all(ht[i] + hu[i] + hv[i] + hw[i] > a[i] for i in R1):
                        continue
                    gens = (u + 1, v + 1, w + 1, t + 1)
                    pt = support.point(t + 1) + support.point(u + 1) + support.point(v + 1) + support.point(w + 1) - alpha
                    key = (3, pt, tuple(sorted(gens)))
                    acc[key] = acc.get(key, 0) + permutation_sign(gens)
    return ExteriorElement(acc)


def delta_q_element(support: Support, polygon: Polygon, partition: FanPartition, alpha: LatticePoint) -> ExteriorElement:
    """Delta_Q(n_alpha) = sum over F_alpha of y^(u+v+w-alpha-1) ⊗ e_u ∧ e_v ∧ e_w."""
    acc = ExteriorElement()
    for u, v, w in enumerate_F_alpha(support, polygon, partition, alpha):
        pt = support.point(u) + support.point(v) + support.point(w) - alpha
        acc = acc + ExteriorElement.basis(2, pt, (u, v, w))
    return acc


def levels_interior(element: ExteriorElement, polygon: Polygon) -> bool:
    """Every term's point lies in the interior of (level)Q."""
    return all(polygon.contains(p, lvl, interior=True) for (lvl, p, _g) in element.terms)


@dataclass(frozen=True)
class DeltaCheck:
    alpha: LatticePoint
    ok: bool
    lhs_terms: int
    rhs_terms: int
    sign_flip: bool = False

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.as_list(),
            "ok": self.ok,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
        }


def delta_relation(support: Support, polygon: Polygon, partition: FanPartition, alpha: LatticePoint, j0=None) -> DeltaCheck:
    if j0 is None:
        j0 = j0_element(support, polygon, mu_partition(support, polygon, partition))
    lhs = delta_q_element(support, polygon, partition, alpha).wedge(element_m(support))
    rhs = j0_wedge_e_alpha_direct(j0, support, alpha)
    assert levels_interior(lhs, polygon) and levels_interior(rhs, polygon)
    ok = lhs == rhs
    return DeltaCheck(
        alpha=alpha,
        ok=ok,
        lhs_terms=len(lhs),
        rhs_terms=len(rhs),
        sign_flip=(not ok) and bool(lhs) and lhs == -rhs,
    )


def verify_delta_relation(support: Support, polygon: Polygon, partition: FanPartition, alpha: LatticePoint) -> bool:
    return delta_relation(support, polygon, partition, alpha).ok
