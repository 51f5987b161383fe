"""
Independent ground truth for the closed forms: seeded Monte Carlo sampling,
adaptive quadrature and exhaustive flip enumeration.
"""
from .models import OracleConfig, OracleReport
from .quadrature import (
    QuadratureResult,
    integrate_abs_residual,
    integrate_sq_residual,
    quad_expected_abs_residual,
    quad_expected_sq_residual,
)
from .monte_carlo import draw_flip_masks, draw_label_realizations, mc_accuracy, mc_regression_metric
from .enumeration import enumerate_flip_moments

__all__ = [
    "OracleConfig",
    "OracleReport",
    "QuadratureResult",
    "integrate_abs_residual",
    "integrate_sq_residual",
    "quad_expected_abs_residual",
    "quad_expected_sq_residual",
    "draw_flip_masks",
    "draw_label_realizations",
    "mc_accuracy",
    "mc_regression_metric",
    "enumerate_flip_moments",
]
