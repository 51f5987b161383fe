"""
Accuracy under the label-flip model.

Every label is independently replaced by its complement with probability q.
An observation that was classified correctly becomes wrong exactly when its
label flips (and vice versa), so with a = classical accuracy:

  E(accuracy)   = (1 - q) a + q (1 - a) = a + q (1 - 2a)
  Var(accuracy) = q (1 - q) / M    (M independent flips)
"""

from typing import Sequence

from config.logging_conf import get_logger
from config.settings import NUMERICS
from metrics.classical import classical_accuracy, confusion_counts
from metrics.models import (
    ClassificationDataset,
    ClassificationMetricReport,
    FlipModel,
    MetricEstimate,
    VarianceConvention,
)
from utils.errors import ConsistencyError, EmptyDatasetError, ValidationError

logger = get_logger(__name__)


def corrected_accuracy(a: float, q: float) -> float:
    """a + q (1 - 2a) for a bare accuracy value a in [0, 1]."""
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise ValidationError(f"accuracy must lie in [0, 1], got {a!r}")
    q = FlipModel(q).q
    return a + q * (1.0 - 2.0 * a)


def accuracy_variance(q: float, size: int, convention: VarianceConvention) -> float:
    model = FlipModel(q)
    single = model.p * model.q
    if VarianceConvention(convention) is VarianceConvention.PAPER_PRINTED:
        return single
    return single / size


def expected_accuracy(
    ds: ClassificationDataset,
    convention: VarianceConvention = VarianceConvention.ORACLE_CONSISTENT,
) -> MetricEstimate:
    if ds is None or len(ds.observations) == 0:
        raise EmptyDatasetError()
    a = classical_accuracy(ds)
    return MetricEstimate(
        corrected_accuracy(a, ds.q),
        accuracy_variance(ds.q, ds.size, convention),
    )


def accuracy_decomposition(
    ds: ClassificationDataset,
    convention: VarianceConvention = VarianceConvention.ORACLE_CONSISTENT,
    paper_compat: bool = False,
) -> ClassificationMetricReport:
    """Expected accuracy through the confusion matrix: correct cells survive with
    probability 1 - q, wrong cells become correct with probability q."""
    corrected = expected_accuracy(ds, convention)
    counts = confusion_counts(ds)
    m = ds.size
    q = ds.q
    via_counts = (1.0 - q) * counts.correct / m + q * counts.wrong / m

    if abs(via_counts - corrected.expected) > NUMERICS.decomposition_atol:
        raise ConsistencyError(
            f"confusion-matrix route gives {via_counts!r}, affine route {corrected.expected!r}"
        )
    logger.debug("accuracy_decomposition: counts=%s q=%s", counts.as_tuple(), q)

    return ClassificationMetricReport(
        classical_accuracy=classical_accuracy(ds),
        corrected=corrected,
        confusion=counts,
        variance_convention=VarianceConvention(convention),
        decomposition_expected=via_counts,
        q=q,
        paper_printed_variance=(
            accuracy_variance(q, m, VarianceConvention.PAPER_PRINTED) if paper_compat else None
        ),
    )


def accuracy_with_flipped_labels(ds: ClassificationDataset, flips: Sequence[int]) -> float:
    """Realized accuracy when label i is kept where flips[i] == 1 and inverted where it is 0."""
    if ds is None or len(ds.observations) == 0:
        raise EmptyDatasetError()
    flips = list(flips)
    if len(flips) != ds.size:
        raise ValidationError(f"flip vector has length {len(flips)}, dataset has {ds.size} observations")
    correct = 0
    for was_correct, bit in zip(ds.correct, flips):
        if bit not in (0, 1):
            raise ValidationError(f"flip bits must be 0 or 1, got {bit!r}")
        correct += int(was_correct) if bit else 1 - int(was_correct)
    return correct / ds.size
