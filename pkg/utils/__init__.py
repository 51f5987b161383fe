"""
Shared helpers: exception hierarchy.
"""
from .errors import (
    MetricsError,
    ValidationError,
    EmptyDatasetError,
    NumericalError,
    QuadratureError,
    ConsistencyError,
)

__all__ = [
    "MetricsError",
    "ValidationError",
    "EmptyDatasetError",
    "NumericalError",
    "QuadratureError",
    "ConsistencyError",
]
