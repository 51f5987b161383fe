"""
Expected value and variance of MSE and MAE when labels carry Gaussian
measurement errors, y_i ~ N(y_bar_i, sigma_i^2).

MSE
  E   = (1/M) sum (delta_i^2 + sigma_i^2)
  Var = (2/M^2) sum sigma_i^4 + (4/M^2) sum delta_i^2 sigma_i^2
  With one common sigma these reduce to classical + sigma^2 and
  2 sigma^4 / M + 4 sigma^2 classical / M (scaled non-central chi-square).

MAE
  Each |y_i - y_hat_i| is folded normal with location delta_i and scale
  sigma_i, so E = (1/M) sum E|delta_i| and Var = (1/M^2) sum Var|delta_i|.
  Observations with sigma_i = 0 contribute |delta_i| with zero variance.
"""

import math
from itertools import chain
from typing import Optional

from config.logging_conf import get_logger
from metrics.classical import classical_mae, classical_mse, compensated_sum
from metrics.models import MetricEstimate, RegressionDataset, RegressionMetricReport, SigmaMode
from metrics.special_functions import (
    SQRT2,
    SQRT_2_OVER_PI,
    FoldedNormalParams,
    NoncentralChiSquareParams,
    erf,
    folded_normal_mean,
    folded_normal_variance,
    noncentral_chisq_mean,
    noncentral_chisq_variance,
)
from utils.errors import EmptyDatasetError, ValidationError

logger = get_logger(__name__)


def _check(ds: RegressionDataset) -> None:
    if ds is None or len(ds.observations) == 0:
        raise EmptyDatasetError()


def _common_sigma_squared(ds: RegressionDataset) -> float:
    lo, hi = float(ds.sigma.min()), float(ds.sigma.max())
    if lo == hi:
        return lo * lo
    # sigmas agree only to homoscedastic_rtol; use the mean of sigma^2
    return compensated_sum(s * s for s in ds.sigma) / ds.size


# -------------------------------------------------------------------
# MSE
# -------------------------------------------------------------------

def _expected_mse_sum(ds: RegressionDataset) -> float:
    d2 = (d * d for d in ds.residual_means)
    s2 = (s * s for s in ds.sigma)
    return compensated_sum(chain(d2, s2)) / ds.size


def _expected_mse_constant(ds: RegressionDataset) -> MetricEstimate:
    m = ds.size
    # classical + sigma^2, summed exactly as in the general form
    expected = _expected_mse_sum(ds)
    if float(ds.sigma.min()) != float(ds.sigma.max()):
        # sigmas equal only within homoscedastic_rtol: keep each sigma_i in the variance
        return MetricEstimate(expected, _expected_mse_general(ds).variance)
    sigma2 = float(ds.sigma[0]) ** 2
    classical = classical_mse(ds)
    variance = 2.0 * sigma2 * sigma2 / m + 4.0 * sigma2 * classical / m
    return MetricEstimate(expected, variance)


def _expected_mse_general(ds: RegressionDataset) -> MetricEstimate:
    m = ds.size
    d2 = [d * d for d in ds.residual_means]
    s2 = [s * s for s in ds.sigma]
    expected = compensated_sum(chain(d2, s2)) / m
    variance = (
        2.0 * compensated_sum(v * v for v in s2) / (m * m)
        + 4.0 * compensated_sum(a * b for a, b in zip(d2, s2)) / (m * m)
    )
    return MetricEstimate(expected, variance)


def expected_mse(ds: RegressionDataset, mode: Optional[SigmaMode] = None) -> MetricEstimate:
    """E(MSE) and Var(MSE) under the label-noise model.

    mode=None picks the constant-sigma form for homoscedastic datasets and the
    general form otherwise; passing a mode forces that path.
    """
    _check(ds)
    mode = ds.sigma_mode if mode is None else SigmaMode(mode)
    if mode is SigmaMode.CONSTANT_SIGMA:
        if not ds.is_homoscedastic:
            raise ValidationError("constant-sigma form requested for a heteroscedastic dataset")
        logger.debug("expected_mse: constant-sigma path, M=%d", ds.size)
        return _expected_mse_constant(ds)
    logger.debug("expected_mse: heteroscedastic path, M=%d", ds.size)
    return _expected_mse_general(ds)


def noncentral_params_for_mse(ds: RegressionDataset) -> NoncentralChiSquareParams:
    """M * MSE / sigma^2 ~ chi'_M(lambda) with lambda = sum delta_i^2 / sigma^2."""
    _check(ds)
    if not ds.is_homoscedastic:
        raise ValidationError("non-central chi-square form needs a common sigma")
    sigma2 = _common_sigma_squared(ds)
    if sigma2 <= 0:
        raise ValidationError("non-central chi-square form needs sigma > 0")
    lam = compensated_sum(d * d for d in ds.residual_means) / sigma2
    return NoncentralChiSquareParams(ds.size, lam)


def expected_mse_from_chisq(ds: RegressionDataset) -> MetricEstimate:
    """The constant-sigma moments obtained by scaling the chi-square moments by sigma^2 / M."""
    params = noncentral_params_for_mse(ds)
    scale = _common_sigma_squared(ds) / ds.size
    return MetricEstimate(
        scale * noncentral_chisq_mean(params),
        scale * scale * noncentral_chisq_variance(params),
    )


# -------------------------------------------------------------------
# MAE
# -------------------------------------------------------------------

def _abs_residual_moments(delta: float, sigma: float):
    if sigma == 0:
        return abs(delta), 0.0
    params = FoldedNormalParams(delta, sigma)
    return folded_normal_mean(params), folded_normal_variance(params)


def expected_mae(ds: RegressionDataset) -> MetricEstimate:
    """E(MAE) = classical MAE + Delta(MAE) and Var(MAE) via folded-normal moments."""
    _check(ds)
    m = ds.size
    moments = [_abs_residual_moments(d, s) for d, s in zip(ds.residual_means, ds.sigma)]
    expected = compensated_sum(mean for mean, _ in moments) / m
    variance = compensated_sum(var for _, var in moments) / (m * m)
    return MetricEstimate(expected, variance)


def paper_compat_variance_mae(ds: RegressionDataset) -> float:
    """Var(MAE) exactly as printed in the closed-form variance table.

    (1/M^2) sum { delta^2 + sigma^2 - delta sqrt(2/pi) exp(-delta^2 / 2 sigma^2)
                  - delta erf(delta / (sqrt 2 sigma)) }

    The folded-normal mean enters without being squared, so this differs from
    expected_mae().variance; kept only to document that discrepancy.
    """
    _check(ds)
    terms = []
    for i, (d, s) in enumerate(zip(ds.residual_means, ds.sigma), start=1):
        if s <= 0:
            raise ValidationError("printed Var(MAE) divides by sigma; sigma must be > 0", row=i)
        t = d / (SQRT2 * s)
        terms.append(d * d + s * s - d * SQRT_2_OVER_PI * math.exp(-t * t) - d * erf(t))
    m = ds.size
    return compensated_sum(terms) / (m * m)


# -------------------------------------------------------------------
# Reports
# -------------------------------------------------------------------

def mse_report(ds: RegressionDataset) -> RegressionMetricReport:
    corrected = expected_mse(ds)
    noncentrality = None
    if ds.is_homoscedastic and float(ds.sigma.max()) > 0:
        noncentrality = noncentral_params_for_mse(ds).lam
    return RegressionMetricReport(
        metric="mse",
        classical=classical_mse(ds),
        corrected=corrected,
        mode=ds.sigma_mode,
        noncentrality=noncentrality,
    )


def mae_report(ds: RegressionDataset, paper_compat: bool = False) -> RegressionMetricReport:
    corrected = expected_mae(ds)
    return RegressionMetricReport(
        metric="mae",
        classical=classical_mae(ds),
        corrected=corrected,
        mode=ds.sigma_mode,
        paper_printed_variance=paper_compat_variance_mae(ds) if paper_compat else None,
    )
