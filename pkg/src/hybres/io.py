"""Problem-file parsing and exact rational serialization."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DimensionMismatch, InvalidProblem
from .geometry import LatticePoint, Support, missing_hull_points

log = logging.getLogger(__name__)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise InvalidProblem(f"rationals must be integers or 'p/q' strings, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InvalidProblem(f"bad rational {text!r}")
    try:
        num, _, den = text.strip().partition("/")
        if den:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise InvalidProblem(f"bad rational {text!r}") from None


def parse_vertex(text) -> Optional[LatticePoint]:
    if text is None:
        return None
    if isinstance(text, str):
        parts = text.split(",")
    else:
        parts = list(text)
    if len(parts) != 2:
        raise InvalidProblem(f"vertex must be 'x,y', got {text!r}")
    try:
        return LatticePoint(int(parts[0]), int(parts[1]))
    except (TypeError, ValueError):
        raise InvalidProblem(f"vertex must be integer 'x,y', got {text!r}") from None


@dataclass
class ProblemFile:
    support: Support
    coefficients: Optional[list] = None
    vertex: Optional[LatticePoint] = None
    complete_support: bool = False
    seed: int = 0
    added_points: list = field(default_factory=list)


def _parse_support(raw) -> Support:
    if not isinstance(raw, list) or not raw:
        raise InvalidProblem("'support' must be a non-empty list of [x, y] pairs")
    pts = []
    for p in raw:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(c, int) and not isinstance(c, bool) for c in p)):
            raise InvalidProblem(f"bad support point {p!r}")
        pts.append(LatticePoint(p[0], p[1]))
    if len(set(pts)) != len(pts):
        raise InvalidProblem("support points must be pairwise distinct")
    return Support(tuple(pts))


def parse_coefficients(raw, n: int) -> list:
    if not isinstance(raw, list) or len(raw) != 3:
        raise DimensionMismatch("'coefficients' must have exactly 3 rows")
    rows = []
    for row in raw:
        if not isinstance(row, list) or len(row) != n:
            raise DimensionMismatch(f"each coefficient row must have {n} entries")
        rows.append([parse_rational(c) for c in row])
    return rows


def problem_from_dict(data: dict) -> ProblemFile:
    if not isinstance(data, dict):
        raise InvalidProblem("problem must be a JSON object")
    if "support" not in data:
        raise InvalidProblem("problem has no 'support'")
    support = _parse_support(data["support"])
    opts = data.get("options") or {}
    prob = ProblemFile(
        support=support,
        vertex=parse_vertex(opts.get("vertex")),
        complete_support=bool(opts.get("complete_support", False)),
        seed=int(opts.get("seed", 0)),
    )
    if data.get("coefficients") is not None:
        prob.coefficients = parse_coefficients(data["coefficients"], len(support))
    return prob


def load_problem(text: str) -> ProblemFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidProblem(f"malformed JSON: {exc}") from None
    return problem_from_dict(data)


def complete_support(prob: ProblemFile) -> ProblemFile:
    """Append missing hull lattice points with zero coefficients.

    The result is a specialization of the generic resultant, not the
    resultant of a generic system on the completed support.
    """
    missing = missing_hull_points(prob.support)
    if not missing:
        return prob
    log.warning(
        "support completed with %d zero-coefficient point(s) %s; the result is a specialization of the generic resultant",
        len(missing),
        ", ".join(repr(p) for p in missing),
    )
    support = Support(prob.support.points + tuple(missing))
    coeffs = None
    if prob.coefficients is not None:
        coeffs = [row + [Fraction(0)] * len(missing) for row in prob.coefficients]
    return ProblemFile(
        support=support,
        coefficients=coeffs,
        vertex=prob.vertex,
        complete_support=True,
        seed=prob.seed,
        added_points=list(missing),
    )
