"""Exact integration of basis products and the dense operator matrices.

Everything here is dense: with at most 65 basis functions at desk scale
there is nothing to gain from exploiting the block sparsity of the Gram
matrix, so it is asserted in tests rather than used.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .basis import BasisSpec, PiecewiseLinear, basis_piecewise
from .errors import ConditioningError

#: Condition-number guard for the dense factorizations.  Failures must be
#: loud: a silently inaccurate dual basis corrupts every later expansion.
CONDITION_LIMIT = 1e12

# 2-point Gauss-Legendre on [-1, 1]: exact through cubics.  Products of two
# piecewise-linear segments are at most quadratic per cell.
_GAUSS2 = (-1.0 / math.sqrt(3.0), 1.0 / math.sqrt(3.0))


def integrate_product(a: PiecewiseLinear, b: PiecewiseLinear) -> float:
    """Exact integral of a * b over [0, 1].

    The integrand is polynomial of degree <= 2 on every cell of the merged
    breakpoint grid, so per-cell 2-point Gauss is exact up to roundoff.
    """
    lo = max(a.breakpoints[0], b.breakpoints[0])
    hi = min(a.breakpoints[-1], b.breakpoints[-1])
    if lo >= hi:
        return 0.0
    cuts = sorted({lo, hi}
                  | {p for p in a.breakpoints if lo < p < hi}
                  | {p for p in b.breakpoints if lo < p < hi})
    total = 0.0
    for left, right in zip(cuts, cuts[1:]):
        mid = float(left + right) / 2.0
        half = float(right - left) / 2.0
        for g in _GAUSS2:
            x = mid + half * g
            total += half * a(x) * b(x)
    return total


def gram_matrix(spec: BasisSpec) -> np.ndarray:
    """Dense matrix of pairwise basis inner products (computed once, mirrored)."""
    pieces = basis_piecewise(spec)
    n = spec.n_functions
    gram = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            gram[i, j] = gram[j, i] = integrate_product(pieces[i], pieces[j])
    return gram


def _guarded_inverse(matrix: np.ndarray, what: str) -> np.ndarray:
    cond = np.linalg.cond(matrix)
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise ConditioningError(f"{what} is numerically singular", cond)
    lu = lu_factor(matrix)
    return lu_solve(lu, np.eye(matrix.shape[0]))


def dual_transform(gram: np.ndarray) -> np.ndarray:
    """Inverse of the Gram matrix; maps raw moments to expansion coefficients.

    Raises ConditioningError if the condition estimate exceeds
    CONDITION_LIMIT.
    """
    return _guarded_inverse(gram, "Gram matrix")


def derivative_inner_products(spec: BasisSpec) -> np.ndarray:
    """Matrix of integrals (basis function i)' times (basis function j).

    The derivatives are piecewise constant; their point values at the
    breakpoints never enter, only cell integrals.
    """
    pieces = basis_piecewise(spec)
    derivs = [p.derivative() for p in pieces]
    n = spec.n_functions
    inner = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            inner[i, j] = integrate_product(derivs[i], pieces[j])
    return inner


def derivative_matrix(spec: BasisSpec, gram: np.ndarray) -> np.ndarray:
    """Operational matrix mapping coefficients to first-derivative coefficients.

    Basis derivatives are piecewise constant and therefore not inside the
    (continuous piecewise-linear) basis span; the matrix realizes the L2
    projection of the derivative onto the span.  It is exact whenever the
    target's derivative lies in the span, e.g. for affine functions.
    """
    return derivative_inner_products(spec) @ dual_transform(gram)


def second_derivative_matrix(deriv_op: np.ndarray) -> np.ndarray:
    """Projected second derivative: the first-derivative operator squared.

    The basis has zero classical second derivative almost everywhere, so
    this compounds two L2 projections; accuracy improves with resolution.
    """
    return deriv_op @ deriv_op
