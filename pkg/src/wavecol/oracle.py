"""Exact Fourier-series solutions of the benchmark Burgers problems.

For initial data sin(pi x) and 4 x (1 - x) with homogeneous Dirichlet
boundaries, the Cole-Hopf transformation turns the equation into the heat
equation, giving

    u(x, t) = (2 pi / Re) * sum_n  c_n E_n(t) n sin(n pi x)
              -------------------------------------------
              c_0 + sum_n  c_n E_n(t) cos(n pi x)

with E_n(t) = exp(-n**2 pi**2 t / Re) and c_n the cosine moments of the
transformed initial condition (factor 2 for n >= 1).  The series converges
fast for the benchmark times but degenerates as t -> 0+, which is guarded.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import QuadratureError

SIN_PI = "sin_pi"
POLY_4X_1MX = "poly_4x_1mx"

#: Below this time the required number of series terms blows up; the
#: benchmark never needs anything earlier, so refuse instead of degrading.
MIN_TIME = 1e-4

_GAUSS10_X, _GAUSS10_W = leggauss(10)
_MAX_CELLS = 1 << 18


@dataclass(frozen=True)
class ExactSolutionSpec:
    """Problem family, Reynolds number and series/quadrature tolerances."""

    reynolds: float
    ic_family: str
    quad_tol: float = 1e-12
    max_terms: int = 400
    term_tol: float = 1e-14

    def __post_init__(self) -> None:
        if self.reynolds <= 0:
            raise ValueError("reynolds must be positive")
        if self.ic_family not in (SIN_PI, POLY_4X_1MX):
            raise ValueError(f"unknown ic_family {self.ic_family!r}")
        if self.quad_tol <= 0 or self.term_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


def _transformed_ic(spec: ExactSolutionSpec, x: np.ndarray) -> np.ndarray:
    # exp of minus the scaled antiderivative of the initial condition
    if spec.ic_family == SIN_PI:
        return np.exp(-(spec.reynolds / (2.0 * math.pi)) * (1.0 - np.cos(math.pi * x)))
    return np.exp(-x * x * (spec.reynolds / 3.0) * (3.0 - 2.0 * x))


def _composite_gauss(f, n_cells: int) -> float:
    edges = np.linspace(0.0, 1.0, n_cells + 1)
    mid = (edges[:-1] + edges[1:]) / 2.0
    half = np.diff(edges) / 2.0
    total = 0.0
    for g, w in zip(_GAUSS10_X, _GAUSS10_W):
        total += np.sum(w * half * f(mid + half * g))
    return float(total)


@functools.lru_cache(maxsize=None)
def _coefficient(spec: ExactSolutionSpec, n: int) -> float:
    def integrand(x: np.ndarray) -> np.ndarray:
        return _transformed_ic(spec, x) * np.cos(n * math.pi * x)

    # subdivision scaled to the oscillation count, then doubled to tolerance
    cells = max(8, 4 * n)
    previous = _composite_gauss(integrand, cells)
    while cells <= _MAX_CELLS:
        cells *= 2
        current = _composite_gauss(integrand, cells)
        if abs(current - previous) <= spec.quad_tol:
            factor = 1.0 if n == 0 else 2.0
            return factor * current
        previous = current
    raise QuadratureError(
        f"cosine moment n={n} did not reach tol {spec.quad_tol} "
        f"within {_MAX_CELLS} cells"
    )


def fourier_coefficient(spec: ExactSolutionSpec, n: int) -> float:
    """Cosine moment of the transformed initial condition (factor 2 for n >= 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _coefficient(spec, n)


def exact_u(spec: ExactSolutionSpec, x: float, t: float) -> float:
    """Series solution u(x, t) for t > 0.

    Terms are summed until the relative contribution of the newest term to
    both the numerator and the denominator drops below term_tol for two
    consecutive terms (single-term checks would stop early at points where
    sin(n pi x) vanishes).  Hitting max_terms first emits a RuntimeWarning.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x = {x} outside [0, 1]")
    if t <= 0.0:
        raise ValueError("exact solution requires t > 0")
    if t < MIN_TIME:
        raise ValueError(
            f"t = {t} below {MIN_TIME}: series truncation cannot be trusted there"
        )
    if x == 0.0 or x == 1.0:
        # every numerator term carries sin(n pi x) = 0
        return 0.0
    decay = math.pi**2 * t / spec.reynolds
    numerator = 0.0
    denominator = fourier_coefficient(spec, 0)
    quiet_terms = 0
    for n in range(1, spec.max_terms + 1):
        c_n = fourier_coefficient(spec, n)
        damped = c_n * math.exp(-decay * n * n)
        term_num = damped * n * math.sin(n * math.pi * x)
        term_den = damped * math.cos(n * math.pi * x)
        numerator += term_num
        denominator += term_den
        small_num = abs(term_num) <= spec.term_tol * max(abs(numerator), 1e-300)
        small_den = abs(term_den) <= spec.term_tol * abs(denominator)
        if small_num and small_den:
            quiet_terms += 1
            if quiet_terms >= 2:
                break
        else:
            quiet_terms = 0
    else:
        warnings.warn(
            f"series hit max_terms={spec.max_terms} before reaching "
            f"term_tol={spec.term_tol} (x={x}, t={t})",
            RuntimeWarning,
            stacklevel=2,
        )
    return (2.0 * math.pi / spec.reynolds) * numerator / denominator


def table_values(spec: ExactSolutionSpec, times, xs) -> np.ndarray:
    """Matrix of exact values, one row per time, one column per location."""
    return np.array([[exact_u(spec, float(x), float(t)) for x in xs] for t in times])
