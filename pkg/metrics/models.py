"""
Data model shared by the classical and error-aware metric code.

All types are frozen dataclasses; construction validates every field, so any
instance that exists is valid. Residual means follow one sign convention
everywhere: delta_bar_i = y_hat_i - y_bar_i. Every formula in the package
depends only on its square or absolute value.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Tuple

import numpy as np

from config.settings import NUMERICS
from utils.errors import EmptyDatasetError, ValidationError


def _require_finite(value: float, name: str) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


def _readonly(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


class Metric(str, Enum):
    MSE = "mse"
    MAE = "mae"
    ACCURACY = "accuracy"

    @property
    def is_regression(self) -> bool:
        return self is not Metric.ACCURACY


class SigmaMode(str, Enum):
    CONSTANT_SIGMA = "constant-sigma"
    HETEROSCEDASTIC = "heteroscedastic"


class VarianceConvention(str, Enum):
    """How Var(accuracy) is reported under the label-flip model.

    ORACLE_CONSISTENT averages M independent flips: q(1-q)/M.
    PAPER_PRINTED is the single-label value q(1-q).
    """
    ORACLE_CONSISTENT = "oracle-consistent"
    PAPER_PRINTED = "paper-printed"


# -------------------------------------------------------------------
# Regression
# -------------------------------------------------------------------

@dataclass(frozen=True)
class RegressionObservation:
    """One prediction with a noisy label: y ~ N(y_bar, sigma^2)."""
    y_hat: float
    y_bar: float
    sigma: float

    def __post_init__(self):
        object.__setattr__(self, "y_hat", _require_finite(self.y_hat, "y_hat"))
        object.__setattr__(self, "y_bar", _require_finite(self.y_bar, "y_bar"))
        sigma = _require_finite(self.sigma, "sigma")
        if sigma < 0:
            raise ValidationError(f"sigma must be >= 0, got {sigma!r}")
        object.__setattr__(self, "sigma", sigma)

    @property
    def residual_mean(self) -> float:
        return self.y_hat - self.y_bar


@dataclass(frozen=True)
class RegressionDataset:
    observations: Tuple[RegressionObservation, ...]

    def __post_init__(self):
        observations = tuple(self.observations)
        if not observations:
            raise EmptyDatasetError()
        for obs in observations:
            if not isinstance(obs, RegressionObservation):
                raise ValidationError(f"expected RegressionObservation, got {type(obs).__name__}")
        object.__setattr__(self, "observations", observations)

    @classmethod
    def from_arrays(
        cls,
        y_hat: Iterable[float],
        y_bar: Iterable[float],
        sigma: Iterable[float],
    ) -> "RegressionDataset":
        y_hat, y_bar, sigma = list(y_hat), list(y_bar), list(sigma)
        if not (len(y_hat) == len(y_bar) == len(sigma)):
            raise ValidationError(
                f"length mismatch: y_hat={len(y_hat)}, y_bar={len(y_bar)}, sigma={len(sigma)}"
            )
        return cls(tuple(RegressionObservation(h, b, s) for h, b, s in zip(y_hat, y_bar, sigma)))

    def __len__(self) -> int:
        return len(self.observations)

    @property
    def size(self) -> int:
        return len(self.observations)

    @cached_property
    def y_hat(self) -> np.ndarray:
        return _readonly([o.y_hat for o in self.observations])

    @cached_property
    def y_bar(self) -> np.ndarray:
        return _readonly([o.y_bar for o in self.observations])

    @cached_property
    def sigma(self) -> np.ndarray:
        return _readonly([o.sigma for o in self.observations])

    @cached_property
    def residual_means(self) -> np.ndarray:
        return _readonly([o.residual_mean for o in self.observations])

    @cached_property
    def is_homoscedastic(self) -> bool:
        lo, hi = float(self.sigma.min()), float(self.sigma.max())
        return hi - lo <= NUMERICS.homoscedastic_rtol * hi

    @property
    def sigma_mode(self) -> SigmaMode:
        return SigmaMode.CONSTANT_SIGMA if self.is_homoscedastic else SigmaMode.HETEROSCEDASTIC

    def scaled(self, factor: float) -> "RegressionDataset":
        """Multiply predictions, label means and sigmas by a positive constant."""
        if not factor > 0:
            raise ValidationError(f"scale factor must be > 0, got {factor!r}")
        return RegressionDataset.from_arrays(
            (o.y_hat * factor for o in self.observations),
            (o.y_bar * factor for o in self.observations),
            (o.sigma * factor for o in self.observations),
        )


# -------------------------------------------------------------------
# Classification
# -------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationObservation:
    y: int
    p_hat: float

    def __post_init__(self):
        if isinstance(self.y, bool) or self.y not in (0, 1):
            raise ValidationError(f"label y must be 0 or 1, got {self.y!r}")
        object.__setattr__(self, "y", int(self.y))
        p_hat = _require_finite(self.p_hat, "p_hat")
        if not 0.0 <= p_hat <= 1.0:
            raise ValidationError(f"p_hat must lie in [0, 1], got {p_hat!r}")
        object.__setattr__(self, "p_hat", p_hat)


@dataclass(frozen=True)
class FlipModel:
    """Each label is kept with probability p and inverted with probability q."""
    q: float
    p: float = field(init=False)

    def __post_init__(self):
        q = _require_finite(self.q, "q")
        if not 0.0 <= q <= 0.5:
            raise ValidationError(
                f"flip probability q must lie in [0, 0.5], got {q!r}; "
                "for q > 0.5 invert the labels and use 1 - q"
            )
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", 1.0 - q)


@dataclass(frozen=True)
class ClassificationDataset:
    observations: Tuple[ClassificationObservation, ...]
    alpha: float
    q: float

    def __post_init__(self):
        observations = tuple(self.observations)
        if not observations:
            raise EmptyDatasetError()
        object.__setattr__(self, "observations", observations)
        alpha = _require_finite(self.alpha, "alpha")
        if not 0.0 < alpha < 1.0:
            raise ValidationError(f"threshold alpha must lie in (0, 1), got {alpha!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "q", FlipModel(self.q).q)

    @classmethod
    def from_arrays(
        cls,
        y: Iterable[int],
        p_hat: Iterable[float],
        alpha: float = 0.5,
        q: float = 0.0,
    ) -> "ClassificationDataset":
        y, p_hat = list(y), list(p_hat)
        if len(y) != len(p_hat):
            raise ValidationError(f"length mismatch: y={len(y)}, p_hat={len(p_hat)}")
        return cls(tuple(ClassificationObservation(a, b) for a, b in zip(y, p_hat)), alpha, q)

    def __len__(self) -> int:
        return len(self.observations)

    @property
    def size(self) -> int:
        return len(self.observations)

    @property
    def flip_model(self) -> FlipModel:
        return FlipModel(self.q)

    @cached_property
    def labels(self) -> np.ndarray:
        arr = np.array([o.y for o in self.observations], dtype=np.int8)
        arr.setflags(write=False)
        return arr

    @cached_property
    def predictions(self) -> np.ndarray:
        """Predicted class: H(p_hat - alpha) with H(0) = 1."""
        arr = np.array([1 if o.p_hat >= self.alpha else 0 for o in self.observations], dtype=np.int8)
        arr.setflags(write=False)
        return arr

    @cached_property
    def correct(self) -> np.ndarray:
        arr = (self.labels == self.predictions).astype(np.int8)
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn

    @property
    def correct(self) -> int:
        return self.tp + self.tn

    @property
    def wrong(self) -> int:
        return self.fp + self.fn

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.tp, self.tn, self.fp, self.fn)


# -------------------------------------------------------------------
# Results
# -------------------------------------------------------------------

@dataclass(frozen=True)
class MetricEstimate:
    """Expected value and variance of a metric under a noise model."""
    expected: float
    variance: float

    def __post_init__(self):
        object.__setattr__(self, "expected", _require_finite(self.expected, "expected"))
        variance = _require_finite(self.variance, "variance")
        if variance < 0:
            raise ValidationError(f"variance must be >= 0, got {variance!r}")
        object.__setattr__(self, "variance", variance)

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)


@dataclass(frozen=True)
class RegressionMetricReport:
    metric: str
    classical: float
    corrected: MetricEstimate
    mode: SigmaMode
    # Var(MAE) exactly as printed in the closed-form tables; only set on request
    paper_printed_variance: Optional[float] = None
    # chi-square noncentrality of M*MSE/sigma^2 (constant-sigma MSE only)
    noncentrality: Optional[float] = None

    @property
    def correction(self) -> float:
        return self.corrected.expected - self.classical


@dataclass(frozen=True)
class ClassificationMetricReport:
    classical_accuracy: float
    corrected: MetricEstimate
    confusion: ConfusionCounts
    variance_convention: VarianceConvention
    decomposition_expected: float
    q: float
    paper_printed_variance: Optional[float] = None

    @property
    def correction(self) -> float:
        return self.corrected.expected - self.classical_accuracy


