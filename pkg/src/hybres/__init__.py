"""Exact hybrid Sylvester-Bezout matrices for the sparse resultant of three
bivariate Laurent polynomials with a common Newton polygon."""

from .bezout import BracketForm, bezout_block, canonical_bracket, delta_q_column, enumerate_F_alpha
from .core import (
    HybridMatrix,
    ResultantOptions,
    assemble,
    evaluate,
    macaulay_dense_oracle,
    planted_root_system,
    resultant_value,
    scaling_degree_check,
    setup,
)
from .errors import HybresError
from .exterior import ExteriorElement, verify_delta_relation
from .fan import FanPartition, choose_distinguished_cone, partition_fan
from .geometry import LatticePoint, Polygon, Support, homogenize, lattice_points, normalized_area, polygon_from_support
from .linalg import determinant

__version__ = "0.1.0"
