"""
Monte Carlo oracle for the label-noise models.

Regression: y_i = y_bar_i + sigma_i * z_i with z_i standard normal.
Classification: label i is kept with probability p = 1 - q, inverted otherwise.

Draws are produced in fixed-size chunks. Chunk k of stream s comes from
Generator(Philox(SeedSequence(seed, spawn_key=(s, k)))), so each chunk is
independent of the others and of the worker count; chunk results are
concatenated in index order before any reduction.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

import numpy as np

from config.logging_conf import get_logger
from metrics.classical import classical_accuracy, classical_mae, classical_mse
from metrics.classification import expected_accuracy
from metrics.models import ClassificationDataset, Metric, RegressionDataset
from metrics.regression import expected_mae, expected_mse
from oracle.models import OracleConfig, OracleReport
from utils.errors import ValidationError

logger = get_logger(__name__)

LABEL_STREAM = 0
FLIP_STREAM = 1


def _generator(seed: int, stream: int, chunk_index: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(stream, chunk_index))
    return np.random.Generator(np.random.Philox(sequence))


def _chunk_bounds(n_samples: int, chunk_size: int) -> List[Tuple[int, int]]:
    return [(start, min(start + chunk_size, n_samples)) for start in range(0, n_samples, chunk_size)]


def _run_chunks(fn: Callable[[int, int], np.ndarray], cfg: OracleConfig) -> np.ndarray:
    """Evaluate fn(chunk_index, n_rows) for every chunk and concatenate in order."""
    bounds = _chunk_bounds(cfg.n_samples, cfg.chunk_size)
    tasks = [(k, hi - lo) for k, (lo, hi) in enumerate(bounds)]
    logger.debug("sampling %d draws in %d chunks on %d worker(s)", cfg.n_samples, len(tasks), cfg.max_workers)
    if cfg.max_workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=cfg.max_workers) as pool:
            parts = list(pool.map(lambda task: fn(*task), tasks))
    else:
        parts = [fn(*task) for task in tasks]
    return np.concatenate(parts, axis=0)


# -------------------------------------------------------------------
# Samplers
# -------------------------------------------------------------------

def draw_label_realizations(ds: RegressionDataset, cfg: Optional[OracleConfig] = None) -> np.ndarray:
    """(n_samples, M) array of noisy label vectors."""
    cfg = cfg or OracleConfig()

    def chunk(index: int, rows: int) -> np.ndarray:
        z = _generator(cfg.seed, LABEL_STREAM, index).standard_normal((rows, ds.size))
        return ds.y_bar + ds.sigma * z

    return _run_chunks(chunk, cfg)


def draw_flip_masks(ds: ClassificationDataset, cfg: Optional[OracleConfig] = None) -> np.ndarray:
    """(n_samples, M) int8 array; 1 keeps the label, 0 inverts it."""
    cfg = cfg or OracleConfig()
    p = ds.flip_model.p

    def chunk(index: int, rows: int) -> np.ndarray:
        u = _generator(cfg.seed, FLIP_STREAM, index).random((rows, ds.size))
        return (u < p).astype(np.int8)

    return _run_chunks(chunk, cfg)


# -------------------------------------------------------------------
# Reduction
# -------------------------------------------------------------------

def _summarize(values: np.ndarray, closed_form: float, closed_form_variance: float) -> OracleReport:
    n = values.shape[0]
    mean = float(np.mean(values))
    centered = values - mean
    variance = float(np.sum(centered * centered) / (n - 1))
    m4 = float(np.mean(centered ** 4))
    # Var(s^2) ~ (mu4 - sigma^4) / n
    variance_se = math.sqrt(max(m4 - variance * variance, 0.0) / n)
    return OracleReport(
        estimate=mean,
        standard_error=math.sqrt(variance / n),
        n_effective=n,
        closed_form=closed_form,
        variance_estimate=variance,
        variance_standard_error=variance_se,
        variance_closed_form=closed_form_variance,
    )


def _degenerate(value: float, cfg: OracleConfig, closed_form: float, closed_form_variance: float) -> OracleReport:
    return OracleReport(
        estimate=value,
        standard_error=0.0,
        n_effective=cfg.n_samples,
        closed_form=closed_form,
        variance_estimate=0.0,
        variance_standard_error=0.0,
        variance_closed_form=closed_form_variance,
    )


def mc_regression_metric(
    ds: RegressionDataset,
    metric: Metric,
    cfg: Optional[OracleConfig] = None,
) -> OracleReport:
    """Sample mean and variance of MSE or MAE over noisy label realizations.

    Steps:
        1. Draw y = y_bar + sigma * z chunk by chunk.
        2. Evaluate the metric on every realization.
        3. Reduce to mean, variance and their standard errors.
    """
    cfg = cfg or OracleConfig()
    metric = Metric(metric)
    if metric is Metric.MSE:
        closed = expected_mse(ds)
        classical = classical_mse(ds)
    elif metric is Metric.MAE:
        closed = expected_mae(ds)
        classical = classical_mae(ds)
    else:
        raise ValidationError(f"mc_regression_metric handles mse and mae, got {metric.value!r}")

    if float(ds.sigma.max()) == 0.0:
        logger.info("all sigmas are zero; %s sampler is degenerate", metric.value)
        return _degenerate(classical, cfg, closed.expected, closed.variance)

    def chunk(index: int, rows: int) -> np.ndarray:
        z = _generator(cfg.seed, LABEL_STREAM, index).standard_normal((rows, ds.size))
        residuals = ds.residual_means - ds.sigma * z
        if metric is Metric.MSE:
            return np.mean(residuals * residuals, axis=1)
        return np.mean(np.abs(residuals), axis=1)

    report = _summarize(_run_chunks(chunk, cfg), closed.expected, closed.variance)
    logger.info(
        "mc %s: estimate=%.10g se=%.3g closed=%.10g z=%s",
        metric.value, report.estimate, report.standard_error, report.closed_form, report.z_score,
    )
    return report


def mc_accuracy(ds: ClassificationDataset, cfg: Optional[OracleConfig] = None) -> OracleReport:
    """Sample mean and variance of accuracy over random flip vectors."""
    cfg = cfg or OracleConfig()
    closed = expected_accuracy(ds)

    if ds.q == 0.0:
        logger.info("q = 0; flip sampler is degenerate")
        return _degenerate(classical_accuracy(ds), cfg, closed.expected, closed.variance)

    p = ds.flip_model.p
    correct = ds.correct.astype(bool)

    def chunk(index: int, rows: int) -> np.ndarray:
        keep = _generator(cfg.seed, FLIP_STREAM, index).random((rows, ds.size)) < p
        # a prediction is right after flipping iff it was right and the label was kept,
        # or it was wrong and the label was inverted
        return np.mean(keep == correct, axis=1)

    report = _summarize(_run_chunks(chunk, cfg), closed.expected, closed.variance)
    logger.info(
        "mc accuracy: estimate=%.10g se=%.3g closed=%.10g z=%s",
        report.estimate, report.standard_error, report.closed_form, report.z_score,
    )
    return report
