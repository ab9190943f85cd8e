"""Linear B-spline scaling functions and semi-orthogonal wavelets on [0, 1].

The basis spans the space of continuous piecewise-linear functions on the
dyadic grid of step 2**-max_level.  It is ordered as the five hat functions
of the coarsest level (level 2, including the two boundary halves) followed
by one wavelet block per detail level: level 2 up to max_level - 1, each
block holding an inner wavelet family plus a left and a right
boundary-adapted wavelet.  All wavelets carry a global 1/6 normalization;
expansion coefficients absorb any rescaling through the dual basis.

Functions are defined through half-open branches in the dilated coordinate
x_dil = 2**level * x.  Evaluation at x = 1 takes the limit from the left so
that the right boundary hat attains 1 there and the partition of unity holds
on the closed interval.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

SCALING = "scaling"
WAVELET = "wavelet"

#: Spline order; only order 2 (piecewise linear) is supported.
SPLINE_ORDER = 2


@dataclass(frozen=True)
class BasisIndex:
    """Position of one basis function: kind, dyadic level and shift."""

    kind: str
    level: int
    shift: int


@dataclass(frozen=True)
class BasisSpec:
    """Index layout of the 2**max_level + 1 basis functions.

    max_level is the resolution of the spanned space: the collocation grid
    has spacing 2**-max_level.  Detail (wavelet) levels run from 2 to
    max_level - 1; at max_level == 2 the basis is the five hat functions
    alone.
    """

    max_level: int
    order: int = SPLINE_ORDER
    index_map: tuple[BasisIndex, ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.order != SPLINE_ORDER:
            raise ValueError(f"only spline order {SPLINE_ORDER} is supported")
        if self.max_level < 2:
            raise ValueError("max_level must be at least 2")
        layout = [BasisIndex(SCALING, 2, k) for k in range(-1, 4)]
        for level in range(2, self.max_level):
            layout.extend(
                BasisIndex(WAVELET, level, k) for k in range(-1, 2**level - 1)
            )
        object.__setattr__(self, "index_map", tuple(layout))

    @property
    def n_functions(self) -> int:
        return 2**self.max_level + 1

    def wavelet_levels(self) -> range:
        return range(2, self.max_level)


def _scaling_value(level: int, shift: int, x_dil: float, closed_right: bool) -> float:
    n = 2**level
    k = shift
    if k == -1:  # left boundary half-hat
        if 0.0 <= x_dil < 1.0:
            return 2.0 - (x_dil - k)
        return 0.0
    if k == n - 1:  # right boundary half-hat
        if k <= x_dil < k + 1 or (closed_right and x_dil == k + 1):
            return x_dil - k
        return 0.0
    if k <= x_dil < k + 1:
        return x_dil - k
    if k + 1 <= x_dil < k + 2:
        return 2.0 - (x_dil - k)
    return 0.0


def _wavelet_value(level: int, shift: int, x_dil: float, closed_right: bool) -> float:
    n = 2**level
    k = shift
    if k == -1:  # left boundary wavelet, support x_dil in [0, 2)
        t = x_dil
        if 0.0 <= t < 0.5:
            return (-6.0 + 23.0 * t) / 6.0
        if 0.5 <= t < 1.0:
            return (14.0 - 17.0 * t) / 6.0
        if 1.0 <= t < 1.5:
            return (-10.0 + 7.0 * t) / 6.0
        if 1.5 <= t < 2.0:
            return (2.0 - t) / 6.0
        return 0.0
    if k == n - 2:  # right boundary wavelet, mirror of the left one
        s = (k + 2) - x_dil
        if k <= x_dil < k + 0.5:
            return (2.0 - s) / 6.0
        if k + 0.5 <= x_dil < k + 1:
            return (-10.0 + 7.0 * s) / 6.0
        if k + 1 <= x_dil < k + 1.5:
            return (14.0 - 17.0 * s) / 6.0
        if k + 1.5 <= x_dil < k + 2 or (closed_right and x_dil == k + 2):
            return (-6.0 + 23.0 * s) / 6.0
        return 0.0
    t = x_dil - k  # inner wavelet, support t in [0, 3)
    if 0.0 <= t < 0.5:
        return t / 6.0
    if 0.5 <= t < 1.0:
        return (4.0 - 7.0 * t) / 6.0
    if 1.0 <= t < 1.5:
        return (-19.0 + 16.0 * t) / 6.0
    if 1.5 <= t < 2.0:
        return (29.0 - 16.0 * t) / 6.0
    if 2.0 <= t < 2.5:
        return (-17.0 + 7.0 * t) / 6.0
    if 2.5 <= t < 3.0:
        return (3.0 - t) / 6.0
    return 0.0


def _check_domain(x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x = {x} outside [0, 1]")


def eval_scaling(spec: BasisSpec, level: int, shift: int, x: float) -> float:
    """Value of the hat function at the given level and shift.

    Shifts -1 and 2**level - 1 select the boundary half-hats; the shifts in
    between are full hats peaking at (shift + 1) / 2**level.
    """
    _check_domain(x)
    if not 2 <= level <= spec.max_level:
        raise ValueError(f"scaling level {level} not in 2..{spec.max_level}")
    if not -1 <= shift <= 2**level - 1:
        raise ValueError(f"scaling shift {shift} invalid for level {level}")
    return _scaling_value(level, shift, 2**level * x, closed_right=(x == 1.0))


def eval_wavelet(spec: BasisSpec, level: int, shift: int, x: float) -> float:
    """Value of the (boundary-adapted) wavelet at the given level and shift."""
    _check_domain(x)
    if level not in spec.wavelet_levels():
        raise ValueError(
            f"wavelet level {level} not in 2..{spec.max_level - 1} "
            f"(spec with max_level {spec.max_level})"
        )
    if not -1 <= shift <= 2**level - 2:
        raise ValueError(f"wavelet shift {shift} invalid for level {level}")
    return _wavelet_value(level, shift, 2**level * x, closed_right=(x == 1.0))


def basis_vector(spec: BasisSpec, x: float) -> np.ndarray:
    """All basis functions evaluated at x, in index_map order."""
    _check_domain(x)
    closed = x == 1.0
    out = np.empty(spec.n_functions)
    for i, idx in enumerate(spec.index_map):
        x_dil = 2**idx.level * x
        if idx.kind == SCALING:
            out[i] = _scaling_value(idx.level, idx.shift, x_dil, closed)
        else:
            out[i] = _wavelet_value(idx.level, idx.shift, x_dil, closed)
    return out


def basis_matrix(spec: BasisSpec, xs) -> np.ndarray:
    """Evaluation matrix with rows basis_vector(spec, x) for each x."""
    return np.array([basis_vector(spec, float(x)) for x in np.asarray(xs, float)])


@dataclass(frozen=True)
class PiecewiseLinear:
    """Exact segment representation of one piecewise-linear function.

    Breakpoints are stored as rationals so that quadrature cells can be
    placed exactly.  Segment i is value = slopes[i] * x + intercepts[i] on
    [breakpoints[i], breakpoints[i + 1]); the function is zero outside
    [breakpoints[0], breakpoints[-1]].  Evaluation at the right support end
    uses the last segment (limit from the left).
    """

    breakpoints: tuple[Fraction, ...]
    slopes: tuple[float, ...]
    intercepts: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.breakpoints) != len(self.slopes) + 1:
            raise ValueError("need one more breakpoint than segments")
        if len(self.slopes) != len(self.intercepts):
            raise ValueError("slopes and intercepts must pair up")
        if any(b >= c for b, c in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    @property
    def support(self) -> tuple[Fraction, Fraction]:
        return self.breakpoints[0], self.breakpoints[-1]

    def __call__(self, x: float) -> float:
        lo = self.breakpoints[0]
        hi = self.breakpoints[-1]
        if x < lo or x > hi:
            return 0.0
        if x == hi:
            seg = len(self.slopes) - 1
        else:
            seg = bisect.bisect_right(self.breakpoints, x) - 1
        return self.slopes[seg] * x + self.intercepts[seg]

    def derivative(self) -> "PiecewiseLinear":
        """Cell-wise derivative (piecewise constant on the same cells)."""
        zeros = (0.0,) * len(self.slopes)
        return PiecewiseLinear(self.breakpoints, zeros, self.slopes)


# Branch coefficient tables in the local coordinate t = 2**level * x - shift:
# entries ((t_lo, t_hi), (a, b)) meaning value = (a + b * t) / denom on the
# half-open t-interval.  Boundary variants are the restrictions/mirrors of
# the full stencils.
_HALF = Fraction(1, 2)
_SCALING_BRANCHES = {
    "inner": (((Fraction(0), Fraction(1)), (0, 1)),
              ((Fraction(1), Fraction(2)), (2, -1))),
    "left": (((Fraction(1), Fraction(2)), (2, -1)),),
    "right": (((Fraction(0), Fraction(1)), (0, 1)),),
}
_WAVELET_BRANCHES = {
    "inner": (((Fraction(0), _HALF), (0, 1)),
              ((_HALF, Fraction(1)), (4, -7)),
              ((Fraction(1), 3 * _HALF), (-19, 16)),
              ((3 * _HALF, Fraction(2)), (29, -16)),
              ((Fraction(2), 5 * _HALF), (-17, 7)),
              ((5 * _HALF, Fraction(3)), (3, -1))),
    "left": (((Fraction(1), 3 * _HALF), (-29, 23)),
             ((3 * _HALF, Fraction(2)), (31, -17)),
             ((Fraction(2), 5 * _HALF), (-17, 7)),
             ((5 * _HALF, Fraction(3)), (3, -1))),
    "right": (((Fraction(0), _HALF), (0, 1)),
              ((_HALF, Fraction(1)), (4, -7)),
              ((Fraction(1), 3 * _HALF), (-20, 17)),
              ((3 * _HALF, Fraction(2)), (40, -23))),
}


def _variant(idx: BasisIndex) -> str:
    if idx.shift == -1:
        return "left"
    last = 2**idx.level - (1 if idx.kind == SCALING else 2)
    return "right" if idx.shift == last else "inner"


def _piecewise_from_branches(idx: BasisIndex) -> PiecewiseLinear:
    table = _SCALING_BRANCHES if idx.kind == SCALING else _WAVELET_BRANCHES
    denom = 1 if idx.kind == SCALING else 6
    scale = 2**idx.level
    breakpoints = []
    slopes = []
    intercepts = []
    for (t_lo, t_hi), (a, b) in table[_variant(idx)]:
        x_lo = (idx.shift + t_lo) / scale
        if not breakpoints:
            breakpoints.append(x_lo)
        breakpoints.append((idx.shift + t_hi) / scale)
        # value = (a + b * (scale * x - shift)) / denom
        slopes.append(b * scale / denom)
        intercepts.append((a - b * idx.shift) / denom)
    return PiecewiseLinear(tuple(breakpoints), tuple(slopes), tuple(intercepts))


def basis_piecewise(spec: BasisSpec) -> list[PiecewiseLinear]:
    """Exact segment representations of all basis functions, in order."""
    return [_piecewise_from_branches(idx) for idx in spec.index_map]


def constant_one() -> PiecewiseLinear:
    """The constant function 1 on [0, 1], as a single segment."""
    return PiecewiseLinear((Fraction(0), Fraction(1)), (0.0,), (1.0,))
