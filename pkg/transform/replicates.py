# transform/replicates.py
"""
Repeated label measurements reduced to a mean and a standard deviation per
observation.

The spread is the Bessel-corrected (n - 1) sample standard deviation.
Observations measured once have no spread estimate; they take a
user-supplied fallback sigma or are rejected.
"""

import math
from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import pandas as pd

from config.logging_conf import get_logger
from utils.errors import EmptyDatasetError, ValidationError

logger = get_logger(__name__)


@dataclass(frozen=True)
class ReplicateTable:
    """(observation_id, value) rows, grouped by id in first-appearance order."""
    rows: Tuple[Tuple[str, float], ...]

    def __post_init__(self):
        rows = tuple((str(i), float(v)) for i, v in self.rows)
        if not rows:
            raise EmptyDatasetError()
        for i, (obs_id, value) in enumerate(rows, start=1):
            if not math.isfinite(value):
                raise ValidationError(f"replicate of {obs_id!r} is not finite", row=i)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, ids, values) -> "ReplicateTable":
        return cls(tuple(zip(ids, values)))

    def groups(self) -> "OrderedDict[str, List[float]]":
        grouped: "OrderedDict[str, List[float]]" = OrderedDict()
        for obs_id, value in self.rows:
            grouped.setdefault(obs_id, []).append(value)
        return grouped


def _mean_and_std(values: List[float]) -> Tuple[float, float]:
    n = len(values)
    mean = math.fsum(values) / n
    if n == 1:
        return mean, math.nan
    return mean, math.sqrt(math.fsum((v - mean) ** 2 for v in values) / (n - 1))


def reduce_replicates(table: ReplicateTable, fallback_sigma: Optional[float] = None) -> pd.DataFrame:
    """
    One row per observation id, in first-appearance order.

    Columns: id, y_bar, sigma, n_replicates, sigma_from_fallback.

    Raises:
        ValidationError: an id has a single replicate and no fallback sigma was given.
    """
    if fallback_sigma is not None and not (math.isfinite(fallback_sigma) and fallback_sigma >= 0):
        raise ValidationError(f"fallback sigma must be finite and >= 0, got {fallback_sigma!r}")

    records: List[Dict] = []
    for obs_id, values in table.groups().items():
        y_bar, sigma = _mean_and_std(values)
        from_fallback = len(values) == 1
        if from_fallback:
            if fallback_sigma is None:
                raise ValidationError(
                    f"observation {obs_id!r} has a single replicate; supply a fallback sigma"
                )
            sigma = float(fallback_sigma)
        records.append({
            "id": obs_id,
            "y_bar": y_bar,
            "sigma": sigma,
            "n_replicates": len(values),
            "sigma_from_fallback": from_fallback,
        })

    reduced = pd.DataFrame.from_records(records)
    n_fallback = int(reduced["sigma_from_fallback"].sum())
    if n_fallback:
        logger.warning("%d observation(s) use the fallback sigma %r", n_fallback, fallback_sigma)
    logger.info("Reduced %d replicates to %d observations", len(table.rows), len(reduced))
    return reduced
