"""Multiresolution B-spline wavelet collocation for the viscous Burgers equation."""

from .approx import (
    LevelSplit,
    combine_levels,
    interpolate,
    project_l2,
    reconstruct,
    split_levels,
    truncate,
)
from .basis import (
    BasisIndex,
    BasisSpec,
    PiecewiseLinear,
    basis_matrix,
    basis_piecewise,
    basis_vector,
    eval_scaling,
    eval_wavelet,
)
from .bench import (
    CaseDefinition,
    Case3Report,
    ErrorReport,
    RunResult,
    case_definition,
    error_metrics,
    oscillation_excess,
    run_case,
    spec_for_points,
)
from .errors import ConditioningError, DivergenceError, QuadratureError
from .operators import (
    derivative_inner_products,
    derivative_matrix,
    dual_transform,
    gram_matrix,
    integrate_product,
    second_derivative_matrix,
)
from .oracle import ExactSolutionSpec, exact_u, fourier_coefficient, table_values
from .solver import (
    BoundarySpec,
    CollocationGrid,
    SolutionSeries,
    SolverConfig,
    assemble_lhs,
    build_rhs,
    initial_coefficients,
    sample,
    solve,
    step,
)

__all__ = [
    "BasisIndex",
    "BasisSpec",
    "BoundarySpec",
    "Case3Report",
    "CaseDefinition",
    "CollocationGrid",
    "ConditioningError",
    "DivergenceError",
    "ErrorReport",
    "ExactSolutionSpec",
    "LevelSplit",
    "PiecewiseLinear",
    "QuadratureError",
    "RunResult",
    "SolutionSeries",
    "SolverConfig",
    "assemble_lhs",
    "basis_matrix",
    "basis_piecewise",
    "basis_vector",
    "build_rhs",
    "case_definition",
    "combine_levels",
    "derivative_inner_products",
    "derivative_matrix",
    "dual_transform",
    "error_metrics",
    "eval_scaling",
    "eval_wavelet",
    "exact_u",
    "fourier_coefficient",
    "gram_matrix",
    "initial_coefficients",
    "integrate_product",
    "interpolate",
    "oscillation_excess",
    "project_l2",
    "reconstruct",
    "run_case",
    "sample",
    "second_derivative_matrix",
    "solve",
    "spec_for_points",
    "split_levels",
    "step",
    "table_values",
    "truncate",
]
