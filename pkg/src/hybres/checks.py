"""Seeded property suites behind ``hybres check``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    ResultantOptions,
    degree_per_poly,
    macaulay_dense_oracle,
    planted_root_system,
    random_coefficients,
    resultant_value,
    scaling_degree_check,
    setup,
)
from .errors import DegenerateBaseValue
from .exterior import delta_relation, element_m, j0_element, mu_partition
from .geometry import Support, dense_simplex, squareness_counts
from .sampling import random_lattice_polygon

SUITES = ("planted", "generic", "scaling", "delta", "ehrhart", "macaulay")
DEFAULT_TRIALS = {"planted": 50, "generic": 50, "scaling": 1, "delta": 1, "ehrhart": 100, "macaulay": 20}
SCALING_LAMBDAS = (Fraction(2), Fraction(-3), Fraction(5, 2))


@dataclass
class CheckReport:
    suite: str
    passed: int = 0
    total: int = 0
    ok: bool = True
    lines: list = field(default_factory=list)
    records: list = field(default_factory=list)

    def add(self, ok: bool, line: str, record: Optional[dict] = None) -> None:
        self.total += 1
        self.passed += bool(ok)
        self.lines.append(("PASS " if ok else "FAIL ") + line)
        if record is not None:
            self.records.append(record)

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "passed": self.passed, "total": self.total, "results": self.records}


def random_torus_point(rng: random.Random) -> tuple:
    def coord():
        num = rng.choice([i for i in range(-5, 6) if i])
        return Fraction(num, rng.randint(1, 4))

    return coord(), coord()


def check_planted(support: Support, trials: int, seed: int, options=None) -> CheckReport:
    rep = CheckReport("planted")
    rng = random.Random(seed)
    for t in range(trials):
        root = random_torus_point(rng)
        coeffs = planted_root_system(support, root, rng.randrange(2**32))
        val = resultant_value(support, coeffs, options)
        rep.add(val == 0, f"trial {t}: root=({root[0]},{root[1]}) resultant={val}", {"root": [str(r) for r in root], "resultant": str(val)})
    rep.ok = rep.passed == rep.total
    return rep


def check_generic(support: Support, trials: int, seed: int, options=None) -> CheckReport:
    """At most one vanishing determinant allowed per 50 random systems."""
    rep = CheckReport("generic")
    rng = random.Random(seed)
    for t in range(trials):
        val = resultant_value(support, random_coefficients(len(support), rng.randrange(2**32)), options)
        rep.add(val != 0, f"trial {t}: resultant={val}", {"resultant": str(val)})
    rep.ok = rep.total - rep.passed <= rep.total // 50
    return rep


def check_scaling(support: Support, trials: int, seed: int, options=None) -> CheckReport:
    rep = CheckReport("scaling")
    rng = random.Random(seed)
    deg = degree_per_poly(support)
    done = 0
    while done < trials:
        coeffs = random_coefficients(len(support), rng.randrange(2**32))
        try:
            results = [(i, lam, scaling_degree_check(support, coeffs, lam, i, options)) for i in (1, 2, 3) for lam in SCALING_LAMBDAS]
        except DegenerateBaseValue:
            continue
        for i, lam, ok in results:
            rep.add(ok, f"f{i} scaled by {lam}: ratio lambda^{deg}", {"poly": i, "lambda": str(lam), "exponent": deg, "ok": ok})
        done += 1
    rep.ok = rep.passed == rep.total
    return rep


def check_delta(support: Support, options=None) -> CheckReport:
    rep = CheckReport("delta")
    s = setup(support, options)
    j0 = j0_element(support, s.polygon, mu_partition(support, s.polygon, s.partition))
    kernel_ok = j0.wedge(element_m(support)) == 0
    rep.add(kernel_ok, "J0 ∧ m = 0")
    for alpha in support.points:
        d = delta_relation(support, s.polygon, s.partition, alpha, j0)
        note = " (uniform sign flip)" if d.sign_flip else ""
        rep.add(d.ok, f"alpha={alpha!r}: lhs_terms={d.lhs_terms} rhs_terms={d.rhs_terms}{note}", d.to_json())
    rep.ok = rep.passed == rep.total
    return rep


def check_ehrhart(trials: int, seed: int) -> CheckReport:
    rep = CheckReport("ehrhart")
    rng = random.Random(seed)
    for t in range(trials):
        poly = random_lattice_polygon(rng, 5)
        c = squareness_counts(poly)
        rep.add(c["rows"] == c["cols"], f"trial {t}: {c['rows']} = {c['cols']}", c)
    rep.ok = rep.passed == rep.total
    return rep


def check_macaulay(trials: int, seed: int) -> CheckReport:
    rep = CheckReport("macaulay")
    rng = random.Random(seed)
    for d in (1, 2):
        support = dense_simplex(d)
        done = 0
        while done < trials:
            coeffs = random_coefficients(len(support), rng.randrange(2**32))
            try:
                oracle = macaulay_dense_oracle(d, coeffs, support)
            except DegenerateBaseValue:
                continue
            val = resultant_value(support, coeffs)
            rep.add(abs(val) == abs(oracle), f"d={d}: |{val}| vs |{oracle}|", {"d": d, "resultant": str(val), "oracle": str(oracle)})
            done += 1
    rep.ok = rep.passed == rep.total
    return rep


def run_suite(suite: str, support: Optional[Support], trials: Optional[int] = None, seed: int = 0, options: Optional[ResultantOptions] = None) -> CheckReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    trials = DEFAULT_TRIALS[suite] if trials is None else trials
    if suite == "ehrhart":
        return check_ehrhart(trials, seed)
    if suite == "macaulay":
        return check_macaulay(trials, seed)
    if support is None:
        raise ValueError(f"suite {suite!r} needs a support")
    if suite == "planted":
        return check_planted(support, trials, seed, options)
    if suite == "generic":
        return check_generic(support, trials, seed, options)
    if suite == "scaling":
        return check_scaling(support, trials, seed, options)
    return check_delta(support, options)
