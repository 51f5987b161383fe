"""
Adaptive Gauss-Kronrod quadrature of the per-observation expectations

    E[(y - y_hat)^2] and E[|y - y_hat|],   y ~ N(y_bar, sigma^2),

integrated over u = (y - y_bar) / sigma in [-12, 12] (the truncated tail mass
is below 1e-32). The absolute-value integrand is split at its kink
u = (y_hat - y_bar) / sigma.
"""

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional

import numpy as np

from config.logging_conf import get_logger
from config.settings import ORACLE_SETTINGS
from metrics.models import RegressionObservation
from oracle.models import OracleConfig
from utils.errors import QuadratureError, ValidationError

logger = get_logger(__name__)

# nodes and weights for the 7-point Gauss / 15-point Kronrod pair on [-1, 1]
KRONROD_NODES = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
KRONROD_WEIGHTS = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
GAUSS_WEIGHTS = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full symmetric node set: x = [-nodes..., 0, +nodes...]
_X = np.concatenate([-KRONROD_NODES[:-1], [0.0], KRONROD_NODES[:-1][::-1]])
_WK = np.concatenate([KRONROD_WEIGHTS[:-1], [KRONROD_WEIGHTS[-1]], KRONROD_WEIGHTS[:-1][::-1]])
# Gauss nodes are the odd-indexed Kronrod nodes (+-0.949, +-0.742, +-0.406, 0)
_WG = np.zeros(15)
_WG[[1, 3, 5]] = GAUSS_WEIGHTS[:3]
_WG[7] = GAUSS_WEIGHTS[3]
_WG[[13, 11, 9]] = GAUSS_WEIGHTS[:3]

_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    n_intervals: int
    max_depth: int


def gauss_kronrod(f: Callable[[np.ndarray], np.ndarray], a: float, b: float):
    """K15 estimate on [a, b] with |K15 - G7| as its error bound."""
    half_width = (b - a) / 2.0
    center = (a + b) / 2.0
    fx = f(center + half_width * _X)
    kronrod = half_width * float(np.dot(_WK, fx))
    gauss = half_width * float(np.dot(_WG, fx))
    return kronrod, abs(kronrod - gauss)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    breakpoints: Iterable[float],
    tolerance: float,
    max_depth: int,
    max_intervals: int = ORACLE_SETTINGS.quad_max_intervals,
) -> QuadratureResult:
    """Adaptive bisection over the intervals defined by sorted breakpoints.

    The interval with the largest error estimate is split until the summed
    error is below max(tolerance, 64 eps |I|); below that floor the estimate
    is dominated by rounding.
    """
    points = sorted(set(float(p) for p in breakpoints))
    if len(points) < 2:
        raise ValidationError("integration needs at least two distinct breakpoints")

    # heap of (-error, counter, a, b, value, error, depth)
    heap: List[tuple] = []
    counter = 0
    for a, b in zip(points[:-1], points[1:]):
        value, error = gauss_kronrod(f, a, b)
        heapq.heappush(heap, (-error, counter, a, b, value, error, 0))
        counter += 1

    deepest = 0
    while True:
        total = math.fsum(item[4] for item in heap)
        total_error = math.fsum(item[5] for item in heap)
        target = max(tolerance, 64.0 * _EPS * abs(total))
        if total_error <= target:
            return QuadratureResult(total, total_error, len(heap), deepest)

        worst = heap[0]
        _, _, a, b, _, _, depth = worst
        if depth >= max_depth or len(heap) >= max_intervals:
            raise QuadratureError("adaptive quadrature did not converge", total_error, depth)

        heapq.heappop(heap)
        mid = (a + b) / 2.0
        for lo, hi in ((a, mid), (mid, b)):
            value, error = gauss_kronrod(f, lo, hi)
            heapq.heappush(heap, (-error, counter, lo, hi, value, error, depth + 1))
            counter += 1
        deepest = max(deepest, depth + 1)


# nodes never carry the magnitude of y_bar; the residual at u is sigma * u - delta
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _window(n_initial: int) -> List[float]:
    half = ORACLE_SETTINGS.truncation_sigmas
    return list(np.linspace(-half, half, n_initial + 1))


def _standard_normal_density(u: np.ndarray) -> np.ndarray:
    return _INV_SQRT_2PI * np.exp(-0.5 * u * u)


def _check_observation(obs: RegressionObservation) -> None:
    if not obs.sigma > 0:
        raise ValidationError(f"quadrature needs sigma > 0, got {obs.sigma!r}")


def integrate_sq_residual(obs: RegressionObservation, cfg: Optional[OracleConfig] = None) -> QuadratureResult:
    cfg = cfg or OracleConfig()
    _check_observation(obs)
    delta, sigma = obs.residual_mean, obs.sigma
    result = integrate(
        lambda u: (sigma * u - delta) ** 2 * _standard_normal_density(u),
        _window(ORACLE_SETTINGS.quad_initial_intervals),
        cfg.quad_tolerance,
        cfg.max_quad_depth,
    )
    logger.debug("squared residual quadrature: %d intervals, error %.3e", result.n_intervals, result.error)
    return result


def integrate_abs_residual(
    obs: RegressionObservation,
    cfg: Optional[OracleConfig] = None,
    split_at_kink: bool = True,
) -> QuadratureResult:
    cfg = cfg or OracleConfig()
    _check_observation(obs)
    delta, sigma = obs.residual_mean, obs.sigma
    points = _window(ORACLE_SETTINGS.quad_initial_intervals)
    kink = delta / sigma
    if split_at_kink and points[0] < kink < points[-1]:
        points.append(kink)
    result = integrate(
        lambda u: np.abs(sigma * u - delta) * _standard_normal_density(u),
        points,
        cfg.quad_tolerance,
        cfg.max_quad_depth,
    )
    logger.debug("absolute residual quadrature: %d intervals, error %.3e", result.n_intervals, result.error)
    return result


def quad_expected_sq_residual(obs: RegressionObservation, cfg: Optional[OracleConfig] = None) -> float:
    """Numerical E[(y - y_hat)^2]; equals delta^2 + sigma^2."""
    return integrate_sq_residual(obs, cfg).value


def quad_expected_abs_residual(obs: RegressionObservation, cfg: Optional[OracleConfig] = None) -> float:
    """Numerical E|y - y_hat|; equals the folded-normal mean at (delta, sigma)."""
    return integrate_abs_residual(obs, cfg).value
