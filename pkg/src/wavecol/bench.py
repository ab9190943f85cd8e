"""Benchmark cases, error metrics against the exact solution, and reports.

Three standard cases are covered: sin(pi x) and 4 x (1 - x) initial data
with homogeneous Dirichlet boundaries (exact series solutions available),
and the antisymmetric cubic 50 (1/2 - x)**3 with zero-derivative Neumann
boundaries, for which only qualitative properties can be checked.  Reports
compare against the exact solution and against published comparator values,
and are written as CSV or markdown shaped like the published tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from . import published
from .approx import truncate
from .basis import BasisSpec, basis_matrix
from .operators import derivative_matrix, derivative_inner_products, gram_matrix
from .oracle import POLY_4X_1MX, SIN_PI, ExactSolutionSpec, table_values
from .solver import (
    DIRICHLET,
    NEUMANN,
    BoundarySpec,
    SolutionSeries,
    SolverConfig,
    solve,
)

VALID_N_POINTS = (5, 9, 17, 33, 65)

#: Resolution of the plot-ready profiles: smooth at every n_points without
#: implying extra accuracy.
PROFILE_POINTS = 401

#: Window over which front oscillation is measured for case 3; the fronts
#: advance from the boundaries and meet at the center.
FRONT_WINDOW = (0.25, 0.75)

_REPORT_XS = published.COMPARISON_X


@dataclass(frozen=True)
class CaseDefinition:
    """One benchmark problem: initial data, boundaries and report layout."""

    case_id: int
    reynolds: float
    ic: Callable[[np.ndarray], np.ndarray]
    bc: BoundarySpec
    report_times: tuple[float, ...]
    report_xs: tuple[float, ...]
    oracle_family: str | None


def _default_times(case_id: int, reynolds: float) -> tuple[float, ...]:
    if case_id == 3:
        return (0.1, 0.5, 1.0)
    return (0.5, 1.0, 2.0) if reynolds >= 5.0 else (0.05, 0.1, 0.2)


def case_definition(case_id: int, reynolds: float | None = None,
                    times: tuple[float, ...] | None = None) -> CaseDefinition:
    """Standard definition of benchmark cases 1-3.

    Cases 1 and 2 default to Re = 1 with the published report times for
    that Reynolds number; case 3 defaults to Re = 10.
    """
    if case_id == 1:
        reynolds = 1.0 if reynolds is None else reynolds
        ic = lambda x: np.sin(np.pi * x)
        bc = BoundarySpec(DIRICHLET, 0.0, 0.0)
        family = SIN_PI
    elif case_id == 2:
        reynolds = 1.0 if reynolds is None else reynolds
        ic = lambda x: 4.0 * x * (1.0 - x)
        bc = BoundarySpec(DIRICHLET, 0.0, 0.0)
        family = POLY_4X_1MX
    elif case_id == 3:
        reynolds = 10.0 if reynolds is None else reynolds
        ic = lambda x: 50.0 * (0.5 - x) ** 3
        bc = BoundarySpec(NEUMANN, 0.0, 0.0)
        family = None
    else:
        raise ValueError(f"unknown case id {case_id}")
    if times is None:
        times = _default_times(case_id, reynolds)
    return CaseDefinition(case_id, float(reynolds), ic, bc, tuple(times),
                          _REPORT_XS, family)


@dataclass(frozen=True)
class ErrorReport:
    """Numeric vs exact values at the report grid, with comparator columns.

    avg_rel_err maps each time to the arithmetic mean over the report
    locations of |numeric - exact| / |exact| (locations with exact = 0 are
    excluded; none occur at the standard interior points).  comparator_avg
    applies the same metric to the published comparator rows.
    """

    case_id: int
    reynolds: float
    n_points: int
    dt: float
    theta: float
    times: tuple[float, ...]
    xs: tuple[float, ...]
    numeric: np.ndarray
    exact: np.ndarray
    abs_err: np.ndarray
    rel_err: np.ndarray
    avg_rel_err: dict[float, float]
    comparator_rows: dict[str, dict[float, tuple[float, ...]]]
    comparator_avg: dict[str, dict[float, float]]


def _relative_errors(numeric: np.ndarray, exact: np.ndarray) -> np.ndarray:
    rel = np.full_like(numeric, np.nan)
    mask = exact != 0.0
    rel[mask] = np.abs(numeric - exact)[mask] / np.abs(exact)[mask]
    return rel


def error_metrics(case: CaseDefinition, n_points: int, dt: float, theta: float,
                  numeric: np.ndarray, exact: np.ndarray) -> ErrorReport:
    """Assemble the full error report from numeric and exact value grids."""
    numeric = np.asarray(numeric, float)
    exact = np.asarray(exact, float)
    if numeric.shape != exact.shape:
        raise ValueError("numeric and exact grids must have the same shape")
    abs_err = np.abs(numeric - exact)
    rel_err = _relative_errors(numeric, exact)
    avg = {t: float(np.nanmean(rel_err[i]))
           for i, t in enumerate(case.report_times)}

    comparator_rows: dict[str, dict[float, tuple[float, ...]]] = {}
    comparator_avg: dict[str, dict[float, float]] = {}
    if tuple(case.report_xs) == published.COMPARISON_X:
        for method in ("ifdm", "bem", "cw_np33", "cw_np65"):
            rows = {}
            avgs = {}
            for i, t in enumerate(case.report_times):
                row = published.profile_row(case.case_id, case.reynolds, t, method)
                if row is None:
                    continue
                rows[t] = row
                rel = _relative_errors(np.asarray(row), exact[i])
                avgs[t] = float(np.nanmean(rel))
            if rows:
                comparator_rows[method] = rows
                comparator_avg[method] = avgs

    return ErrorReport(
        case_id=case.case_id, reynolds=case.reynolds, n_points=n_points,
        dt=dt, theta=theta, times=case.report_times, xs=case.report_xs,
        numeric=numeric, exact=exact, abs_err=abs_err, rel_err=rel_err,
        avg_rel_err=avg, comparator_rows=comparator_rows,
        comparator_avg=comparator_avg,
    )


def oscillation_excess(values: np.ndarray) -> float:
    """Total variation beyond the net change: zero for monotone data."""
    steps = np.diff(np.asarray(values, float))
    return float(np.sum(np.abs(steps)) - abs(np.sum(steps)))


@dataclass(frozen=True)
class Case3Report:
    """Qualitative property measurements for the Neumann case.

    Per report time: the antisymmetry defect max |u(x) + u(1 - x)| on the
    dense profile grid, |u(1/2)|, the boundary derivative residuals, and
    the oscillation excess inside FRONT_WINDOW.
    """

    case_id: int
    reynolds: float
    n_points: int
    dt: float
    theta: float
    times: tuple[float, ...]
    antisymmetry: dict[float, float]
    center_abs: dict[float, float]
    neumann_residuals: dict[float, tuple[float, float]]
    front_oscillation: dict[float, float]


@dataclass(frozen=True)
class RunResult:
    """Everything one benchmark run produced, ready for report emission."""

    case: CaseDefinition
    n_points: int
    dt: float
    theta: float
    report: ErrorReport | Case3Report
    profile_xs: np.ndarray
    profiles: dict[float, np.ndarray]
    series: SolutionSeries
    operators: dict[str, np.ndarray]
    truncate_level: int | None = None


def spec_for_points(n_points: int) -> BasisSpec:
    """Basis spec whose collocation grid has the requested point count."""
    if n_points not in VALID_N_POINTS:
        raise ValueError(f"n_points must be one of {VALID_N_POINTS}")
    return BasisSpec(max_level=int(math.log2(n_points - 1)))


def run_case(case: CaseDefinition, n_points: int, dt: float = 1e-3,
             theta: float = 0.5, t_end: float | None = None,
             truncate_level: int | None = None) -> RunResult:
    """Solve one case at one resolution and measure everything the reports need."""
    spec = spec_for_points(n_points)
    gram = gram_matrix(spec)
    deriv_op = derivative_matrix(spec, gram)
    config = SolverConfig(
        reynolds=case.reynolds,
        t_end=max(case.report_times) if t_end is None else t_end,
        bc=case.bc, ic=case.ic, spec=spec, dt=dt, theta=theta,
    )
    series = solve(config, deriv_op=deriv_op)

    dense_xs = np.linspace(0.0, 1.0, PROFILE_POINTS)
    dense_rows = basis_matrix(spec, dense_xs)
    report_rows = basis_matrix(spec, case.report_xs)

    def coeffs_at(t: float) -> np.ndarray:
        c = series.coefficients_at(t)
        if truncate_level is not None:
            c = truncate(c, spec, truncate_level)
        return c

    profiles = {t: dense_rows @ coeffs_at(t) for t in case.report_times}

    if case.oracle_family is not None:
        numeric = np.array([report_rows @ coeffs_at(t) for t in case.report_times])
        exact = table_values(
            ExactSolutionSpec(reynolds=case.reynolds, ic_family=case.oracle_family),
            case.report_times, case.report_xs,
        )
        report: ErrorReport | Case3Report = error_metrics(
            case, n_points, dt, theta, numeric, exact)
    else:
        window = (dense_xs >= FRONT_WINDOW[0]) & (dense_xs <= FRONT_WINDOW[1])
        endpoint_deriv = basis_matrix(spec, [0.0, 1.0]) @ deriv_op.T
        antisymmetry = {}
        center = {}
        residuals = {}
        oscillation = {}
        for t in case.report_times:
            c = coeffs_at(t)
            u = profiles[t]
            antisymmetry[t] = float(np.max(np.abs(u + u[::-1])))
            center[t] = abs(float(
                basis_matrix(spec, [0.5])[0] @ c))
            left, right = endpoint_deriv @ c
            residuals[t] = (abs(float(left)), abs(float(right)))
            oscillation[t] = oscillation_excess(u[window])
        report = Case3Report(
            case_id=case.case_id, reynolds=case.reynolds, n_points=n_points,
            dt=dt, theta=theta, times=case.report_times,
            antisymmetry=antisymmetry, center_abs=center,
            neumann_residuals=residuals, front_oscillation=oscillation,
        )

    operators = {
        "gram": gram,
        "deriv_inner": derivative_inner_products(spec),
        "deriv_op": deriv_op,
    }
    return RunResult(
        case=case, n_points=n_points, dt=dt, theta=theta, report=report,
        profile_xs=dense_xs, profiles=profiles, series=series,
        operators=operators, truncate_level=truncate_level,
    )


# ---------------------------------------------------------------------------
# report emission

def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _fmt_pub(value: float) -> str:
    return f"{value:.5f}"


def _stem(result: RunResult) -> str:
    return (f"case{result.case.case_id}"
            f"_re{result.case.reynolds:g}_np{result.n_points}")


def _comparison_csv(report: ErrorReport) -> str:
    lines = ["time,x,numeric,exact,abs_err,rel_err,ifdm,bem"]
    for i, t in enumerate(report.times):
        ifdm = report.comparator_rows.get("ifdm", {}).get(t)
        bem = report.comparator_rows.get("bem", {}).get(t)
        for j, x in enumerate(report.xs):
            lines.append(",".join([
                f"{t:g}", f"{x:g}",
                _fmt(report.numeric[i, j]), _fmt(report.exact[i, j]),
                _fmt(report.abs_err[i, j]), _fmt(report.rel_err[i, j]),
                _fmt_pub(ifdm[j]) if ifdm else "",
                _fmt_pub(bem[j]) if bem else "",
            ]))
    return "\n".join(lines) + "\n"


def _summary_csv(report: ErrorReport) -> str:
    lines = ["time,avg_rel_err,avg_rel_err_ifdm,avg_rel_err_bem"]
    for t in report.times:
        ifdm = report.comparator_avg.get("ifdm", {}).get(t)
        bem = report.comparator_avg.get("bem", {}).get(t)
        lines.append(",".join([
            f"{t:g}", _fmt(report.avg_rel_err[t]),
            _fmt(ifdm) if ifdm is not None else "",
            _fmt(bem) if bem is not None else "",
        ]))
    return "\n".join(lines) + "\n"


def _case3_csv(report: Case3Report) -> str:
    lines = ["time,antisymmetry,center_abs,neumann_left,neumann_right,"
             "front_oscillation"]
    for t in report.times:
        left, right = report.neumann_residuals[t]
        lines.append(",".join([
            f"{t:g}", _fmt(report.antisymmetry[t]), _fmt(report.center_abs[t]),
            _fmt(left), _fmt(right), _fmt(report.front_oscillation[t]),
        ]))
    return "\n".join(lines) + "\n"


_METHOD_LABELS = {
    "ifdm": "IFDM (published)",
    "bem": "BEM (published)",
    "cw_np33": "wavelet collocation, 33 points (published)",
    "cw_np65": "wavelet collocation, 65 points (published)",
}


def _comparison_markdown(report: ErrorReport) -> str:
    head = (f"# Case {report.case_id}, Re = {report.reynolds:g}, "
            f"N_p = {report.n_points}\n")
    parts = [head]
    header = "| method | " + " | ".join(f"x={x:g}" for x in report.xs) + " |"
    rule = "|---" * (len(report.xs) + 1) + "|"
    for i, t in enumerate(report.times):
        parts.append(f"\n## t = {t:g}\n")
        parts.append(header)
        parts.append(rule)
        for method, label in _METHOD_LABELS.items():
            row = report.comparator_rows.get(method, {}).get(t)
            if row is None:
                continue
            parts.append(f"| {label} | "
                         + " | ".join(_fmt_pub(v) for v in row) + " |")
        parts.append("| exact | "
                     + " | ".join(_fmt_pub(v) for v in report.exact[i]) + " |")
        parts.append(f"| this run (N_p={report.n_points}) | "
                     + " | ".join(_fmt_pub(v) for v in report.numeric[i]) + " |")
    parts.append("\n## Average relative error\n")
    parts.append("| method | " + " | ".join(f"t={t:g}" for t in report.times) + " |")
    parts.append("|---" * (len(report.times) + 1) + "|")
    parts.append("| this run | "
                 + " | ".join(f"{report.avg_rel_err[t]:.2e}" for t in report.times)
                 + " |")
    for method in ("ifdm", "bem"):
        avgs = report.comparator_avg.get(method)
        if not avgs:
            continue
        cells = []
        for t in report.times:
            value = avgs.get(t)
            cells.append(f"{value:.2e}" if value is not None else "")
        parts.append(f"| {_METHOD_LABELS[method]} | " + " | ".join(cells) + " |")
    return "\n".join(parts) + "\n"


def _case3_markdown(report: Case3Report) -> str:
    parts = [f"# Case 3 (Neumann), Re = {report.reynolds:g}, "
             f"N_p = {report.n_points}\n",
             "| t | antisymmetry | center value | boundary slope (left, right) "
             "| front oscillation |",
             "|---|---|---|---|---|"]
    for t in report.times:
        left, right = report.neumann_residuals[t]
        parts.append(
            f"| {t:g} | {report.antisymmetry[t]:.3e} "
            f"| {report.center_abs[t]:.3e} | {left:.3e}, {right:.3e} "
            f"| {report.front_oscillation[t]:.5f} |")
    return "\n".join(parts) + "\n"


def emit_reports(result: RunResult, fmt: str, out_dir: Path) -> list[Path]:
    """Write the report files for one run; returns the created paths."""
    if fmt not in ("csv", "md"):
        raise ValueError(f"unknown format {fmt!r}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = _stem(result)
    written: list[Path] = []
    if isinstance(result.report, ErrorReport):
        if fmt == "csv":
            written.append(_write(out_dir / f"report_{stem}.csv",
                                  _comparison_csv(result.report)))
            written.append(_write(out_dir / f"summary_{stem}.csv",
                                  _summary_csv(result.report)))
        else:
            written.append(_write(out_dir / f"report_{stem}.md",
                                  _comparison_markdown(result.report)))
    else:
        if fmt == "csv":
            written.append(_write(out_dir / f"report_{stem}.csv",
                                  _case3_csv(result.report)))
        else:
            written.append(_write(out_dir / f"report_{stem}.md",
                                  _case3_markdown(result.report)))
    return written


def emit_profiles(result: RunResult, out_dir: Path) -> list[Path]:
    """Write one x,u profile CSV per report time (plot-ready)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = _stem(result)
    written = []
    for t in result.case.report_times:
        lines = ["x,u"]
        for x, u in zip(result.profile_xs, result.profiles[t]):
            lines.append(f"{_fmt(x)},{_fmt(u)}")
        written.append(_write(out_dir / f"profile_{stem}_t{t:g}.csv",
                              "\n".join(lines) + "\n"))
    return written


def emit_operator_dump(result: RunResult, out_dir: Path) -> list[Path]:
    """Write the dense operator matrices as row-major CSV (debug aid)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, matrix in result.operators.items():
        lines = [",".join(_fmt(v) for v in row) for row in matrix]
        written.append(_write(
            out_dir / f"operators_np{result.n_points}_{name}.csv",
            "\n".join(lines) + "\n"))
    return written


def _write(path: Path, content: str) -> Path:
    path.write_text(content)
    return path
