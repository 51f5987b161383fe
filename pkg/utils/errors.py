# utils/errors.py
"""
Exception hierarchy shared by every layer.

ValidationError marks bad input (CLI exit code 2); everything else that
escapes to the CLI is treated as an internal failure (exit code 1).
"""

from typing import Optional


class MetricsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MetricsError, ValueError):
    """Invalid input data, parameters or configuration."""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        self.row = row
        self.column = column
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column '{column}'")
        if location:
            message = f"{', '.join(location)}: {message}"
        super().__init__(message)


class EmptyDatasetError(ValidationError):
    def __init__(self, message: str = "empty dataset"):
        super().__init__(message)


class NumericalError(MetricsError, ArithmeticError):
    """A computation left its numerically valid range."""


class QuadratureError(NumericalError):
    """Adaptive quadrature could not reach the requested tolerance."""

    def __init__(self, message: str, error_bound: float, depth: int):
        self.error_bound = error_bound
        self.depth = depth
        super().__init__(f"{message} (achieved error bound {error_bound:.3e}, depth {depth})")


class ConsistencyError(MetricsError):
    """Two independent routes to the same quantity disagree."""
