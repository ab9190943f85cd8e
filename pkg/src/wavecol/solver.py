"""Time integration of the viscous Burgers equation by wavelet collocation.

Each step solves a linear system: diffusion is theta-weighted between the
old and new time levels (Crank-Nicolson at the default theta = 1/2) while
the convection product is evaluated fully at the old level.  The left-hand
matrix is therefore constant in time and factored once.  Interior rows
collocate the scheme at the uniform grid points; the first and last rows
impose the boundary conditions on the new coefficients, as value rows for
Dirichlet data or first-derivative rows for Neumann data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .basis import BasisSpec, basis_matrix
from .errors import ConditioningError, DivergenceError
from .operators import (
    CONDITION_LIMIT,
    derivative_matrix,
    gram_matrix,
    second_derivative_matrix,
)

DIRICHLET = "dirichlet"
NEUMANN = "neumann"


@dataclass(frozen=True)
class BoundarySpec:
    """Endpoint data: values of u (Dirichlet) or of du/dx (Neumann)."""

    kind: str
    left_value: float = 0.0
    right_value: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in (DIRICHLET, NEUMANN):
            raise ValueError(f"unknown boundary kind {self.kind!r}")


@dataclass(frozen=True)
class CollocationGrid:
    """Uniform collocation points: endpoints plus 2**max_level - 1 interior."""

    points: np.ndarray

    @classmethod
    def for_spec(cls, spec: BasisSpec) -> "CollocationGrid":
        return cls(points=np.linspace(0.0, 1.0, spec.n_functions))

    @property
    def interior(self) -> np.ndarray:
        return self.points[1:-1]

    @property
    def endpoints(self) -> tuple[float, float]:
        return float(self.points[0]), float(self.points[-1])


@dataclass(frozen=True)
class SolverConfig:
    """Run parameters: physics, time discretization, boundary and initial data."""

    reynolds: float
    t_end: float
    bc: BoundarySpec
    ic: Callable[[np.ndarray], np.ndarray]
    spec: BasisSpec
    dt: float = 1e-3
    theta: float = 0.5

    def __post_init__(self) -> None:
        if self.reynolds <= 0:
            raise ValueError("reynolds must be positive")
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError("theta must lie in [0, 1]")
        if self.t_end < 0:
            raise ValueError("t_end must be non-negative")

    def n_steps(self) -> int:
        # tolerate roundoff in t_end / dt so exact multiples stay exact
        return max(0, math.ceil(self.t_end / self.dt - 1e-9))


@dataclass(frozen=True)
class CollocationSystem:
    """Factored left-hand side plus the cached evaluation rows it was built from.

    values / first_deriv / second_deriv hold, row per grid point, the
    coefficients-to-point-values maps for u, du/dx and d2u/dx2.
    """

    grid: CollocationGrid
    matrix: np.ndarray
    lu: tuple
    values: np.ndarray
    first_deriv: np.ndarray
    second_deriv: np.ndarray


def _boundary_rows(config: SolverConfig, values: np.ndarray,
                   first_deriv: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if config.bc.kind == NEUMANN:
        return first_deriv[0], first_deriv[-1]
    return values[0], values[-1]


def assemble_lhs(config: SolverConfig, deriv_op: np.ndarray) -> CollocationSystem:
    """Build and factor the (time-independent) left-hand matrix."""
    grid = CollocationGrid.for_spec(config.spec)
    values = basis_matrix(config.spec, grid.points)
    first_deriv = values @ deriv_op.T
    second_deriv = values @ second_derivative_matrix(deriv_op).T
    matrix = values - config.theta * (config.dt / config.reynolds) * second_deriv
    matrix[0], matrix[-1] = _boundary_rows(config, values, first_deriv)
    cond = np.linalg.cond(matrix)
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise ConditioningError("collocation system is numerically singular", cond)
    return CollocationSystem(
        grid=grid,
        matrix=matrix,
        lu=lu_factor(matrix),
        values=values,
        first_deriv=first_deriv,
        second_deriv=second_deriv,
    )


def build_rhs(coeffs: np.ndarray, config: SolverConfig,
              system: CollocationSystem) -> np.ndarray:
    """Right-hand side for one step from the current coefficients.

    Interior entries carry the explicit part of the scheme (old-level
    diffusion share plus the lagged convection product); the first and last
    entries are the prescribed boundary values.
    """
    with np.errstate(over="ignore", invalid="ignore"):
        u = system.values @ coeffs
        u_x = system.first_deriv @ coeffs
        u_xx = system.second_deriv @ coeffs
        rhs = (u
               + (1.0 - config.theta) * (config.dt / config.reynolds) * u_xx
               - config.dt * u * u_x)
    rhs[0] = config.bc.left_value
    rhs[-1] = config.bc.right_value
    return rhs


def step(coeffs: np.ndarray, system: CollocationSystem, config: SolverConfig,
         step_index: int = 0) -> np.ndarray:
    """Advance the coefficients by one time step."""
    rhs = build_rhs(coeffs, config, system)
    if not np.all(np.isfinite(rhs)):
        raise DivergenceError(step_index, step_index * config.dt)
    new = lu_solve(system.lu, rhs)
    if not np.all(np.isfinite(new)):
        raise DivergenceError(step_index + 1, (step_index + 1) * config.dt)
    return new


def initial_coefficients(config: SolverConfig,
                         system: CollocationSystem) -> np.ndarray:
    """Interpolate the initial condition, with the boundary rows enforced.

    Interior rows match the initial data at the grid points; the endpoint
    rows impose the boundary conditions, so for Neumann data the endpoint
    values come from the constrained interpolant rather than the raw data.
    """
    matrix = system.values.copy()
    rhs = np.asarray(config.ic(system.grid.points), float)
    if not np.all(np.isfinite(rhs)):
        raise ValueError("initial condition returned non-finite values")
    matrix[0], matrix[-1] = _boundary_rows(config, system.values,
                                           system.first_deriv)
    rhs[0] = config.bc.left_value
    rhs[-1] = config.bc.right_value
    return np.linalg.solve(matrix, rhs)


@dataclass(frozen=True)
class SolutionSeries:
    """Coefficient history at every time step of one run."""

    times: np.ndarray
    coeffs: np.ndarray
    config: SolverConfig

    def coefficients_at(self, t: float) -> np.ndarray:
        """Coefficients at the stored step nearest to t (exact at multiples of dt)."""
        if t < self.times[0] - 1e-12 or t > self.times[-1] + 1e-12:
            raise ValueError(
                f"t = {t} outside stored range [{self.times[0]}, {self.times[-1]}]"
            )
        return self.coeffs[int(np.argmin(np.abs(self.times - t)))]


def solve(config: SolverConfig, deriv_op: np.ndarray | None = None) -> SolutionSeries:
    """Run the full time integration and record every step.

    The derivative operator may be passed in to share one build across runs
    on the same basis; otherwise it is constructed here.
    """
    if deriv_op is None:
        deriv_op = derivative_matrix(config.spec, gram_matrix(config.spec))
    system = assemble_lhs(config, deriv_op)
    coeffs = initial_coefficients(config, system)
    n_steps = config.n_steps()
    history = np.empty((n_steps + 1, config.spec.n_functions))
    history[0] = coeffs
    for n in range(n_steps):
        coeffs = step(coeffs, system, config, step_index=n)
        history[n + 1] = coeffs
    times = np.arange(n_steps + 1) * config.dt
    return SolutionSeries(times=times, coeffs=history, config=config)


def sample(series: SolutionSeries, t: float, xs) -> list[float]:
    """Solution values at the stored step nearest t, one per location."""
    coeffs = series.coefficients_at(t)
    rows = basis_matrix(series.config.spec, xs)
    return [float(v) for v in rows @ coeffs]
