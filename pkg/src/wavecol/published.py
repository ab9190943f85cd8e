"""Published reference values used by the benchmark reports.

Two comparator methods are quoted throughout: IFDM, the fully implicit
finite-difference solution on 100 grid points (Bahadir, Int. J. Appl.
Math., 1999), and BEM, the mixed finite-difference / boundary-element
solution (Bahadir and Saglam, Appl. Math. Comput. 160, 2005).  The
"cw_np33" / "cw_np65" rows are the wavelet-collocation results published
alongside them for 33 and 65 collocation points.  All digits are verbatim
from the published comparison tables; nothing here is computed.

Values are keyed by (case id, Reynolds number), then report time, then
method, and run over the five standard locations COMPARISON_X.
"""

COMPARISON_X = (0.1, 0.3, 0.5, 0.7, 0.9)

PROFILE_ROWS: dict[tuple[int, float], dict[float, dict[str, tuple[float, ...]]]] = {
    # case 1: u(x, 0) = sin(pi x), homogeneous Dirichlet, Re = 1
    (1, 1.0): {
        0.05: {
            "ifdm": (0.17832, 0.47658, 0.60984, 0.51165, 0.20006),
            "bem": (0.17759, 0.47531, 0.60851, 0.51050, 0.19933),
            "cw_np33": (0.17798, 0.47558, 0.60954, 0.51109, 0.20005),
            "cw_np65": (0.17792, 0.47570, 0.60918, 0.51130, 0.19999),
        },
        0.1: {
            "ifdm": (0.11009, 0.29335, 0.37342, 0.31144, 0.12128),
            "bem": (0.10931, 0.29124, 0.37070, 0.30911, 0.12031),
            "cw_np33": (0.10952, 0.29174, 0.37187, 0.30988, 0.12078),
            "cw_np65": (0.10948, 0.29181, 0.37163, 0.30999, 0.12073),
        },
        0.2: {
            "ifdm": (0.04273, 0.11276, 0.14120, 0.11574, 0.04457),
            "bem": (0.04220, 0.11044, 0.13809, 0.11322, 0.04391),
            "cw_np33": (0.04194, 0.11059, 0.13860, 0.11345, 0.04371),
            "cw_np65": (0.04192, 0.11061, 0.13849, 0.11348, 0.04369),
        },
    },
    # case 1, Re = 10
    (1, 10.0): {
        0.5: {
            "ifdm": (0.11048, 0.32367, 0.50447, 0.57664, 0.30912),
            "bem": (0.10986, 0.32191, 0.50240, 0.57514, 0.30779),
            "cw_np33": (0.10991, 0.32207, 0.50281, 0.57542, 0.30933),
        },
        1.0: {
            "ifdm": (0.06689, 0.19445, 0.29448, 0.31107, 0.14769),
            "bem": (0.06644, 0.19263, 0.29139, 0.30711, 0.14507),
            "cw_np33": (0.06631, 0.19270, 0.29194, 0.30776, 0.14605),
        },
        2.0: {
            "ifdm": (0.02909, 0.08044, 0.10939, 0.09838, 0.04037),
            "bem": (0.02913, 0.07951, 0.10770, 0.09663, 0.03976),
            "cw_np33": (0.02875, 0.07941, 0.10792, 0.09676, 0.03968),
        },
    },
    # case 2: u(x, 0) = 4 x (1 - x), homogeneous Dirichlet, Re = 1
    (2, 1.0): {
        0.05: {
            "ifdm": (0.18423, 0.49169, 0.62884, 0.52847, 0.20712),
            "bem": (0.18347, 0.49036, 0.62749, 0.52726, 0.20632),
            "cw_np33": (0.18385, 0.49067, 0.62858, 0.52790, 0.20707),
        },
        0.1: {
            "ifdm": (0.11346, 0.30248, 0.38533, 0.32165, 0.12533),
            "bem": (0.11266, 0.30031, 0.38251, 0.31925, 0.12432),
            "cw_np33": (0.11288, 0.30082, 0.38374, 0.32005, 0.12481),
        },
        0.2: {
            "ifdm": (0.04407, 0.11631, 0.14570, 0.11948, 0.04602),
            "bem": (0.04353, 0.11393, 0.14250, 0.11691, 0.04535),
            "cw_np33": (0.04325, 0.11407, 0.14302, 0.11712, 0.04514),
        },
    },
    # case 2, Re = 10
    (2, 10.0): {
        0.5: {
            "ifdm": (0.11328, 0.33168, 0.51713, 0.59382, 0.32153),
            "bem": (0.11263, 0.32982, 0.51499, 0.59230, 0.32011),
            "cw_np33": (0.11267, 0.33000, 0.51544, 0.59262, 0.32174),
        },
        1.0: {
            "ifdm": (0.06810, 0.19819, 0.30100, 0.31966, 0.15268),
            "bem": (0.06766, 0.19632, 0.29782, 0.31555, 0.14993),
            "cw_np33": (0.06750, 0.19639, 0.29837, 0.31623, 0.15096),
        },
        2.0: {
            "ifdm": (0.02997, 0.08301, 0.11326, 0.10227, 0.04209),
            "bem": (0.02969, 0.08109, 0.11003, 0.09894, 0.04077),
            "cw_np33": (0.02929, 0.08096, 0.11024, 0.09906, 0.04069),
        },
    },
}

# Published case-2 average relative errors over the five locations, keyed by
# (method, Reynolds number, time).  The "cw" rows are the published
# wavelet-collocation averages quoted for context in reports.
AVERAGE_REL_ERRORS: dict[tuple[str, float, float], float] = {
    ("cw", 1.0, 0.05): 4.84e-4,
    ("cw", 1.0, 0.1): 4.41e-4,
    ("cw", 1.0, 0.2): 4.30e-4,
    ("cw", 10.0, 0.5): 2.42e-4,
    ("cw", 10.0, 1.0): 3.23e-4,
    ("cw", 10.0, 2.0): 4.27e-4,
    ("ifdm", 1.0, 0.05): 1.34e-3,
    ("ifdm", 1.0, 0.1): 4.98e-3,
    ("ifdm", 1.0, 0.2): 1.97e-2,
    ("ifdm", 10.0, 0.5): 3.13e-3,
    ("ifdm", 10.0, 1.0): 9.53e-3,
    ("ifdm", 10.0, 2.0): 2.83e-2,
    ("bem", 1.0, 0.05): 1.69e-3,
    ("bem", 1.0, 0.1): 2.47e-3,
    ("bem", 1.0, 0.2): 3.62e-3,
    ("bem", 10.0, 0.5): 1.65e-3,
    ("bem", 10.0, 1.0): 2.99e-3,
    ("bem", 10.0, 2.0): 4.00e-3,
}


def profile_row(case_id: int, reynolds: float, time: float,
                method: str) -> tuple[float, ...] | None:
    """Published values at COMPARISON_X, or None where none were published."""
    by_time = PROFILE_ROWS.get((case_id, reynolds), {})
    for t, methods in by_time.items():
        if abs(t - time) < 1e-12:
            return methods.get(method)
    return None
