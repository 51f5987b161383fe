"""
Classical (error-ignorant) metrics evaluated at the label means.

Every sum over observations goes through compensated_mean, which uses
math.fsum: the result is correctly rounded and therefore independent of
observation order.
"""

import math
from typing import Iterable

from metrics.models import ClassificationDataset, ConfusionCounts, RegressionDataset
from utils.errors import EmptyDatasetError


def compensated_sum(values: Iterable[float]) -> float:
    return math.fsum(values)


def compensated_mean(values: Iterable[float]) -> float:
    values = [float(v) for v in values]
    if not values:
        raise EmptyDatasetError()
    return math.fsum(values) / len(values)


def _require_observations(ds) -> None:
    if ds is None or len(ds.observations) == 0:
        raise EmptyDatasetError()


def classical_mse(ds: RegressionDataset) -> float:
    """(1/M) sum (y_bar_i - y_hat_i)^2."""
    _require_observations(ds)
    return compensated_mean(d * d for d in ds.residual_means)


def classical_mae(ds: RegressionDataset) -> float:
    """(1/M) sum |y_bar_i - y_hat_i|."""
    _require_observations(ds)
    return compensated_mean(abs(d) for d in ds.residual_means)


def classical_accuracy(ds: ClassificationDataset) -> float:
    """Fraction of observations whose thresholded prediction matches the label."""
    _require_observations(ds)
    return int(ds.correct.sum()) / ds.size


def confusion_counts(ds: ClassificationDataset) -> ConfusionCounts:
    _require_observations(ds)
    labels = ds.labels
    preds = ds.predictions
    return ConfusionCounts(
        tp=int(((labels == 1) & (preds == 1)).sum()),
        tn=int(((labels == 0) & (preds == 0)).sum()),
        fp=int(((labels == 0) & (preds == 1)).sum()),
        fn=int(((labels == 1) & (preds == 0)).sum()),
    )
