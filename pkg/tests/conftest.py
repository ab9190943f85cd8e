"""Shared builders, cached so the dense operators are assembled once per level."""

import functools

import pytest

import wavecol as w


@functools.lru_cache(maxsize=None)
def _operator_bundle(max_level: int):
    spec = w.BasisSpec(max_level=max_level)
    gram = w.gram_matrix(spec)
    dual = w.dual_transform(gram)
    deriv_op = w.derivative_matrix(spec, gram)
    return spec, gram, dual, deriv_op


@functools.lru_cache(maxsize=None)
def _benchmark_run(case_id: int, reynolds: float, n_points: int):
    case = w.case_definition(case_id, reynolds=reynolds)
    return w.run_case(case, n_points)


@pytest.fixture(scope="session")
def operators():
    """operators(max_level) -> (spec, gram, dual, deriv_op), memoized."""
    return _operator_bundle


@pytest.fixture(scope="session")
def benchmark_run():
    """benchmark_run(case_id, reynolds, n_points) -> RunResult, memoized."""
    return _benchmark_run
