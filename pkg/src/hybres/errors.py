"""Exception types.

``InvalidProblem`` errors are data/format problems (CLI exit 1);
``MathematicalError`` errors mean the input is well formed but not a valid
instance (CLI exit 2).
"""


class HybresError(Exception):
    pass


class InvalidProblem(HybresError, ValueError):
    pass


class DimensionMismatch(InvalidProblem):
    pass


class MathematicalError(HybresError, ValueError):
    pass


class DegenerateSupport(MathematicalError):
    pass


class NonSaturatedSupport(MathematicalError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        pts = ", ".join(f"({p.x},{p.y})" for p in self.missing)
        super().__init__(f"support is missing hull lattice point(s): {pts}")


class PointOutsidePolytope(MathematicalError):
    pass


class NotAVertex(MathematicalError):
    pass


class PointNotInSupportHull(MathematicalError):
    pass


class DegenerateBaseValue(MathematicalError):
    pass


class UnsupportedSupport(MathematicalError):
    pass
