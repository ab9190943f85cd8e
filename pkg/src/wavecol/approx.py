"""Function expansion in the wavelet basis and multiresolution views.

Two expansion routes are provided: L2 projection through the dual basis,
and interpolation at the uniform collocation grid.  The time stepper uses
interpolation for its initial data (zero residual at the points the scheme
controls); projection is the natural choice for approximation studies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import lu_factor, lu_solve

from .basis import BasisSpec, basis_matrix, basis_piecewise, basis_vector
from .errors import ConditioningError
from .operators import CONDITION_LIMIT

# Gauss order per breakpoint cell for smooth integrands: high enough that
# projection error is dominated by the basis, not by quadrature.
_GAUSS5_X, _GAUSS5_W = leggauss(5)


@dataclass(frozen=True)
class LevelSplit:
    """Coefficients separated into the coarse block and per-level details."""

    coarse: np.ndarray
    details: dict[int, np.ndarray]


def collocation_points(spec: BasisSpec) -> np.ndarray:
    """Uniform grid of n_functions points on [0, 1] (spacing 2**-max_level)."""
    return np.linspace(0.0, 1.0, spec.n_functions)


def project_l2(f: Callable[[np.ndarray], np.ndarray], spec: BasisSpec,
               dual: np.ndarray) -> np.ndarray:
    """Expansion coefficients from L2 projection: dual times raw moments.

    Moments are integrated with composite Gauss-5 on the cells of the full
    basis breakpoint grid (step 2**-max_level) inside each function's
    support, so members of the basis span are integrated exactly and the
    projection round-trips them.
    """
    pieces = basis_piecewise(spec)
    cells = 2**spec.max_level
    moments = np.empty(spec.n_functions)
    for i, piece in enumerate(pieces):
        lo, hi = piece.support
        edges = [Fraction(j, cells)
                 for j in range(int(lo * cells), int(hi * cells) + 1)]
        acc = 0.0
        for left, right in zip(edges, edges[1:]):
            mid = float(left + right) / 2.0
            half = float(right - left) / 2.0
            xs = mid + half * _GAUSS5_X
            fx = np.asarray(f(xs), float)
            if not np.all(np.isfinite(fx)):
                raise ValueError("function returned non-finite values")
            acc += half * np.sum(_GAUSS5_W * fx
                                 * np.array([piece(x) for x in xs]))
        moments[i] = acc
    return dual @ moments


def interpolate(f: Callable[[np.ndarray], np.ndarray], spec: BasisSpec) -> np.ndarray:
    """Expansion coefficients that reproduce f exactly at the collocation grid."""
    grid = collocation_points(spec)
    system = basis_matrix(spec, grid)
    cond = np.linalg.cond(system)
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise ConditioningError("collocation matrix is numerically singular", cond)
    values = np.asarray(f(grid), float)
    if not np.all(np.isfinite(values)):
        raise ValueError("function returned non-finite values")
    return lu_solve(lu_factor(system), values)


def reconstruct(coeffs: np.ndarray, spec: BasisSpec, x: float) -> float:
    """Value of the expansion at x."""
    return float(np.dot(coeffs, basis_vector(spec, x)))


def _level_slices(spec: BasisSpec) -> dict[int, slice]:
    slices: dict[int, slice] = {}
    start = 5
    for level in spec.wavelet_levels():
        width = 2**level
        slices[level] = slice(start, start + width)
        start += width
    return slices


def split_levels(coeffs: np.ndarray, spec: BasisSpec) -> LevelSplit:
    """Separate coefficients into the coarse block and per-level detail blocks."""
    coeffs = np.asarray(coeffs, float)
    if coeffs.shape != (spec.n_functions,):
        raise ValueError(
            f"expected {spec.n_functions} coefficients, got shape {coeffs.shape}"
        )
    details = {lev: coeffs[sl].copy() for lev, sl in _level_slices(spec).items()}
    return LevelSplit(coarse=coeffs[:5].copy(), details=details)


def combine_levels(parts: LevelSplit, spec: BasisSpec) -> np.ndarray:
    """Inverse of split_levels: concatenate blocks back in layout order."""
    blocks = [parts.coarse]
    blocks.extend(parts.details[lev] for lev in spec.wavelet_levels())
    return np.concatenate(blocks)


def truncate(coeffs: np.ndarray, spec: BasisSpec, keep_level: int) -> np.ndarray:
    """Zero every detail block finer than keep_level (coarse view of the data)."""
    if not 2 <= keep_level <= spec.max_level:
        raise ValueError(
            f"keep_level {keep_level} not in 2..{spec.max_level}"
        )
    out = np.asarray(coeffs, float).copy()
    for level, sl in _level_slices(spec).items():
        if level > keep_level:
            out[sl] = 0.0
    return out
