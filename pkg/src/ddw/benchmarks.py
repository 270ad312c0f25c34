"""The 23 classical benchmark functions with bounds and catalogued optima.

F1-F7 are unimodal, F8-F13 multimodal with dimension-scaling landscapes
(dimensionality configurable, 30 by default), F14-F23 fixed-dimension
multimodal (Shekel's foxholes, Kowalik, six-hump camel, Branin,
Goldstein-Price, Hartmann 3/6, Shekel 5/7/10).  Catalogued optimizer
locations reproduce the catalogued minima to well below 1e-6.

F7 adds uniform noise only when a generator is supplied; the noiseless
form keeps the catalogue self-consistent.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

DEFAULT_DIM = 30

_SCHWEFEL_X = 420.96874657644923
_SCHWEFEL_F = -418.9828872724338

_FOXHOLE_A = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
_FOX_A1 = np.tile(_FOXHOLE_A, 5)
_FOX_A2 = np.repeat(_FOXHOLE_A, 5)

_KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])

_HART_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
_HART3_A = np.array([[3.0, 10, 30], [0.1, 10, 35], [3.0, 10, 30], [0.1, 10, 35]])
_HART3_P = 1e-4 * np.array(
    [[3689, 1170, 2673], [4699, 4387, 7470], [1091, 8732, 5547], [381, 5743, 8828]]
)
_HART6_A = np.array(
    [
        [10, 3, 17, 3.5, 1.7, 8],
        [0.05, 10, 17, 0.1, 8, 14],
        [3, 3.5, 1.7, 10, 17, 8],
        [17, 8, 0.05, 10, 0.1, 14],
    ],
    dtype=float,
)
_HART6_P = 1e-4 * np.array(
    [
        [1312, 1696, 5569, 124, 8283, 5886],
        [2329, 4135, 8307, 3736, 1004, 9991],
        [2348, 1451, 3522, 2883, 3047, 6650],
        [4047, 8828, 8732, 5743, 1091, 381],
    ]
)

_SHEKEL_A = np.array(
    [
        [4, 4, 4, 4],
        [1, 1, 1, 1],
        [8, 8, 8, 8],
        [6, 6, 6, 6],
        [3, 7, 3, 7],
        [2, 9, 2, 9],
        [5, 5, 3, 3],
        [8, 1, 8, 1],
        [6, 2, 6, 2],
        [7, 3.6, 7, 3.6],
    ],
    dtype=float,
)
_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def _f1(x):  # sphere
    return float(np.sum(x * x))


def _f2(x):  # Schwefel 2.22
    ax = np.abs(x)
    return float(np.sum(ax) + np.prod(ax))


def _f3(x):  # Schwefel 1.2
    return float(np.sum(np.cumsum(x) ** 2))


def _f4(x):  # Schwefel 2.21
    return float(np.max(np.abs(x)))


def _f5(x):  # Rosenbrock
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def _f6(x):  # step
    return float(np.sum(np.floor(x + 0.5) ** 2))


def _f7(x, rng=None):  # quartic, optionally noisy
    val = float(np.sum(np.arange(1, x.shape[0] + 1) * x**4))
    if rng is not None:
        val += float(rng.random())
    return val


def _f8(x):  # Schwefel 2.26
    return float(-np.sum(x * np.sin(np.sqrt(np.abs(x)))))


def _f9(x):  # Rastrigin
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def _f10(x):  # Ackley
    n = x.shape[0]
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
        + 20.0
        + np.e
    )


def _f11(x):  # Griewank
    n = x.shape[0]
    return float(
        np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(np.arange(1, n + 1)))) + 1.0
    )


def _u(x, a, k, m):
    out = np.zeros_like(x)
    over = x > a
    under = x < -a
    out[over] = k * (x[over] - a) ** m
    out[under] = k * (-x[under] - a) ** m
    return out


def _f12(x):  # penalized 1
    n = x.shape[0]
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / n * core + np.sum(_u(x, 10.0, 100.0, 4.0)))


def _f13(x):  # penalized 2
    core = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return float(0.1 * core + np.sum(_u(x, 5.0, 100.0, 4.0)))


def _f14(x):  # Shekel's foxholes
    denom = np.arange(1.0, 26.0) + (x[0] - _FOX_A1) ** 6 + (x[1] - _FOX_A2) ** 6
    return float(1.0 / (0.002 + np.sum(1.0 / denom)))


def _f15(x):  # Kowalik
    num = x[0] * (_KOWALIK_B**2 + _KOWALIK_B * x[1])
    den = _KOWALIK_B**2 + _KOWALIK_B * x[2] + x[3]
    return float(np.sum((_KOWALIK_A - num / den) ** 2))


def _f16(x):  # six-hump camel
    return float(
        4.0 * x[0] ** 2
        - 2.1 * x[0] ** 4
        + x[0] ** 6 / 3.0
        + x[0] * x[1]
        - 4.0 * x[1] ** 2
        + 4.0 * x[1] ** 4
    )


def _f17(x):  # Branin
    return float(
        (x[1] - 5.1 / (4.0 * np.pi**2) * x[0] ** 2 + 5.0 / np.pi * x[0] - 6.0) ** 2
        + 10.0 * (1.0 - 1.0 / (8.0 * np.pi)) * np.cos(x[0])
        + 10.0
    )


def _f18(x):  # Goldstein-Price
    x1, x2 = x[0], x[1]
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return float(a * b)


def _f19(x):  # Hartmann 3
    return float(-np.sum(_HART_ALPHA * np.exp(-np.sum(_HART3_A * (x - _HART3_P) ** 2, axis=1))))


def _f20(x):  # Hartmann 6
    return float(-np.sum(_HART_ALPHA * np.exp(-np.sum(_HART6_A * (x - _HART6_P) ** 2, axis=1))))


def _shekel(x, m):
    return float(-np.sum(1.0 / (np.sum((x - _SHEKEL_A[:m]) ** 2, axis=1) + _SHEKEL_C[:m])))


def _f21(x):
    return _shekel(x, 5)


def _f22(x):
    return _shekel(x, 7)


def _f23(x):
    return _shekel(x, 10)


@dataclass(frozen=True)
class BenchmarkProblem:
    id: str
    dim: int
    lower: np.ndarray
    upper: np.ndarray
    optimum: float
    optimizer: np.ndarray

    def __call__(self, x, rng=None):
        return eval_benchmark(self.id, x, rng=rng, dim=self.dim)


# id -> (function, scale-free bound or (lower, upper) arrays, fixed dim or
#        None, optimum per dim, optimizer builder)
_CATALOG = {
    "F1": (_f1, 100.0, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F2": (_f2, 10.0, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F3": (_f3, 100.0, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F4": (_f4, 100.0, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F5": (_f5, 30.0, None, lambda d: 0.0, lambda d: np.ones(d)),
    "F6": (_f6, 100.0, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F7": (_f7, 1.28, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F8": (_f8, 500.0, None, lambda d: _SCHWEFEL_F * d, lambda d: np.full(d, _SCHWEFEL_X)),
    "F9": (_f9, 5.12, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F10": (_f10, 32.0, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F11": (_f11, 600.0, None, lambda d: 0.0, lambda d: np.zeros(d)),
    "F12": (_f12, 50.0, None, lambda d: 0.0, lambda d: -np.ones(d)),
    "F13": (_f13, 50.0, None, lambda d: 0.0, lambda d: np.ones(d)),
    "F14": (
        _f14,
        65.536,
        2,
        lambda d: 0.9980038377944498,
        lambda d: np.array([-31.97833357139726, -31.978336789414364]),
    ),
    "F15": (
        _f15,
        5.0,
        4,
        lambda d: 0.0003074859878056051,
        lambda d: np.array(
            [0.19283345304274813, 0.19083624027597035, 0.12311729907598003, 0.13576599033984466]
        ),
    ),
    "F16": (
        _f16,
        5.0,
        2,
        lambda d: -1.0316284534898776,
        lambda d: np.array([0.08984201652927098, -0.7126564013807202]),
    ),
    "F17": (
        _f17,
        (np.array([-5.0, 0.0]), np.array([10.0, 15.0])),
        2,
        lambda d: 0.39788735772973816,
        lambda d: np.array([np.pi, 2.275]),
    ),
    "F18": (_f18, 2.0, 2, lambda d: 3.0, lambda d: np.array([0.0, -1.0])),
    "F19": (
        _f19,
        (np.zeros(3), np.ones(3)),
        3,
        lambda d: -3.862779787332663,
        lambda d: np.array([0.11458888122541287, 0.5556488954739371, 0.8525469842172746]),
    ),
    "F20": (
        _f20,
        (np.zeros(6), np.ones(6)),
        6,
        lambda d: -3.3223680114155147,
        lambda d: np.array(
            [
                0.20168950909365746,
                0.15001069354111374,
                0.4768739729250998,
                0.2753324275220782,
                0.3116516172395686,
                0.6573005345536702,
            ]
        ),
    ),
    "F21": (
        _f21,
        (np.zeros(4), np.full(4, 10.0)),
        4,
        lambda d: -10.153199679058229,
        lambda d: np.array(
            [4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425]
        ),
    ),
    "F22": (
        _f22,
        (np.zeros(4), np.full(4, 10.0)),
        4,
        lambda d: -10.402940566818662,
        lambda d: np.array(
            [4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923]
        ),
    ),
    "F23": (
        _f23,
        (np.zeros(4), np.full(4, 10.0)),
        4,
        lambda d: -10.536409816692045,
        lambda d: np.array(
            [4.000746530253313, 4.000592936779709, 3.9996633957714787, 3.9995097993299975]
        ),
    ),
}

FUNCTION_IDS = tuple(_CATALOG.keys())


def get_problem(fn_id: str, dim: int | None = None) -> BenchmarkProblem:
    """Catalogue lookup; ``dim`` only applies to the dimension-scaling F1-F13."""
    if fn_id not in _CATALOG:
        raise InvalidInputError(f"unknown benchmark function {fn_id!r}")
    func, bound, fixed_dim, optimum, optimizer = _CATALOG[fn_id]
    if fixed_dim is not None:
        if dim is not None and dim != fixed_dim:
            raise InvalidInputError(f"{fn_id} has fixed dimensionality {fixed_dim}")
        d = fixed_dim
    else:
        d = DEFAULT_DIM if dim is None else int(dim)
        if d < 1:
            raise InvalidInputError(f"dimensionality must be positive, got {d}")
    if isinstance(bound, tuple):
        lower, upper = bound
    else:
        lower = np.full(d, -bound)
        upper = np.full(d, bound)
    return BenchmarkProblem(
        id=fn_id, dim=d, lower=lower, upper=upper, optimum=float(optimum(d)),
        optimizer=optimizer(d),
    )


def eval_benchmark(fn_id: str, point, rng=None, dim: int | None = None) -> float:
    """Evaluate one catalogued function at an in-bounds point.

    For the dimension-scaling F1-F13 the dimensionality is taken from the
    point itself unless ``dim`` is given explicitly.
    """
    x = np.asarray(point, dtype=np.float64)
    if dim is None and fn_id in _CATALOG and _CATALOG[fn_id][2] is None and x.ndim == 1:
        dim = x.shape[0]
    problem = get_problem(fn_id, dim)
    if x.ndim != 1 or x.shape[0] != problem.dim:
        raise InvalidInputError(
            f"{fn_id} expects dimensionality {problem.dim}, got shape {x.shape}"
        )
    if np.any(x < problem.lower) or np.any(x > problem.upper):
        raise InvalidInputError(f"point is outside the bounds of {fn_id}")
    func = _CATALOG[fn_id][0]
    if fn_id == "F7":
        return func(x, rng=rng)
    return func(x)


def known_optimum(fn_id: str, dim: int | None = None) -> float:
    """Catalogued global minimum value."""
    return get_problem(fn_id, dim).optimum
