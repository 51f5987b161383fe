"""
Closed-form metrics: data model, classical metrics, special functions and
the error-aware regression/classification formulas.
"""
from .models import (
    RegressionObservation,
    RegressionDataset,
    ClassificationObservation,
    ClassificationDataset,
    ConfusionCounts,
    FlipModel,
    MetricEstimate,
    RegressionMetricReport,
    ClassificationMetricReport,
    Metric,
    SigmaMode,
    VarianceConvention,
)
from .classical import classical_mse, classical_mae, classical_accuracy, confusion_counts
from .regression import (
    expected_mse,
    expected_mae,
    mse_report,
    mae_report,
    paper_compat_variance_mae,
    noncentral_params_for_mse,
)
from .classification import (
    expected_accuracy,
    accuracy_decomposition,
    accuracy_with_flipped_labels,
    corrected_accuracy,
)

__all__ = [
    "RegressionObservation",
    "RegressionDataset",
    "ClassificationObservation",
    "ClassificationDataset",
    "ConfusionCounts",
    "FlipModel",
    "MetricEstimate",
    "RegressionMetricReport",
    "ClassificationMetricReport",
    "Metric",
    "SigmaMode",
    "VarianceConvention",
    "classical_mse",
    "classical_mae",
    "classical_accuracy",
    "confusion_counts",
    "expected_mse",
    "expected_mae",
    "mse_report",
    "mae_report",
    "paper_compat_variance_mae",
    "noncentral_params_for_mse",
    "expected_accuracy",
    "accuracy_decomposition",
    "accuracy_with_flipped_labels",
    "corrected_accuracy",
]
