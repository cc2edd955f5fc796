"""Exact Markov-triangle geometry and Ehrhart period certification."""

from .exact import QuadElem, Rational, format_scalar, parse_scalar, quad_floor, quad_sign
from .geometry import (
    IntMat2,
    Triangle,
    affine_distance,
    angle_determinant,
    apply_unimodular,
    geometric_mutation,
    half_shear,
    hausdorff_distance_sq_upper,
    integral_barycentre,
    integral_bisector,
    primitive_vector,
)
from .markov import (
    CompanionPair,
    MarkovTriple,
    branch_walk,
    companions,
    derived_companion_q2,
    lagrange_number,
    tree,
)
from .triangles import (
    LimitSpec,
    StandardPositionSpec,
    denominator,
    limit_triangle,
    open_problem_triangle,
    sequence_triangle,
    standard_triangle,
    to_barycentric,
)
from .ehrhart import (
    CountTable,
    QuasiPolynomial,
    certify_minimal_period,
    count_lattice_points,
    count_table,
    ehrhart_equivalent,
    fit_quasipolynomial,
    scan_open_problem,
    verify_period_on_range,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
