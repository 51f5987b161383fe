"""
Configuration and result types for the Monte Carlo and quadrature oracles.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from config.settings import ORACLE_SETTINGS
from utils.errors import ValidationError

MIN_SAMPLES = 1000
MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class OracleConfig:
    n_samples: int = ORACLE_SETTINGS.n_samples
    seed: int = ORACLE_SETTINGS.seed
    quad_tolerance: float = ORACLE_SETTINGS.quad_tolerance
    max_quad_depth: int = ORACLE_SETTINGS.max_quad_depth
    chunk_size: int = ORACLE_SETTINGS.chunk_size
    max_workers: int = ORACLE_SETTINGS.max_workers

    def __post_init__(self):
        if isinstance(self.n_samples, bool) or int(self.n_samples) != self.n_samples:
            raise ValidationError(f"n_samples must be an integer, got {self.n_samples!r}")
        if self.n_samples < MIN_SAMPLES:
            raise ValidationError(f"n_samples must be >= {MIN_SAMPLES}, got {self.n_samples}")
        if not 0 <= int(self.seed) <= MAX_SEED or int(self.seed) != self.seed:
            raise ValidationError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if not (0.0 < self.quad_tolerance <= 1e-3):
            raise ValidationError(f"quad_tolerance must lie in (0, 1e-3], got {self.quad_tolerance!r}")
        if self.max_quad_depth < 1:
            raise ValidationError(f"max_quad_depth must be >= 1, got {self.max_quad_depth!r}")
        if self.chunk_size < 1:
            raise ValidationError(f"chunk_size must be >= 1, got {self.chunk_size!r}")
        if self.max_workers < 1:
            raise ValidationError(f"max_workers must be >= 1, got {self.max_workers!r}")
        object.__setattr__(self, "n_samples", int(self.n_samples))
        object.__setattr__(self, "seed", int(self.seed))


def _z_score(estimate: float, closed_form: float, standard_error: float) -> Optional[float]:
    if standard_error > 0:
        return (estimate - closed_form) / standard_error
    return None


@dataclass(frozen=True)
class OracleReport:
    """An oracle estimate next to the closed form it checks.

    z_score is None when the standard error is zero (degenerate sampler or
    quadrature).
    """
    estimate: float
    standard_error: float
    n_effective: int
    closed_form: float
    variance_estimate: Optional[float] = None
    variance_standard_error: Optional[float] = None
    variance_closed_form: Optional[float] = None
    z_score: Optional[float] = field(init=False)
    variance_z_score: Optional[float] = field(init=False)

    def __post_init__(self):
        if not self.standard_error >= 0:
            raise ValidationError(f"standard_error must be >= 0, got {self.standard_error!r}")
        object.__setattr__(self, "z_score", _z_score(self.estimate, self.closed_form, self.standard_error))
        variance_z = None
        if None not in (self.variance_estimate, self.variance_standard_error, self.variance_closed_form):
            variance_z = _z_score(self.variance_estimate, self.variance_closed_form, self.variance_standard_error)
        object.__setattr__(self, "variance_z_score", variance_z)

    def agrees(self, n_se: float = 4.0) -> bool:
        """Both moments within n_se standard errors (exact match when the error is zero)."""
        return _within(self.estimate, self.closed_form, self.standard_error, n_se) and (
            self.variance_estimate is None
            or self.variance_closed_form is None
            or _within(self.variance_estimate, self.variance_closed_form, self.variance_standard_error or 0.0, n_se)
        )


def _within(estimate: float, closed_form: float, standard_error: float, n_se: float) -> bool:
    if standard_error > 0:
        return abs(estimate - closed_form) <= n_se * standard_error
    return math.isclose(estimate, closed_form, rel_tol=1e-12, abs_tol=1e-15)
