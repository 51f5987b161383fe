# transform/utils_cleaning.py
"""
Shared validation utilities for the dataset transformers.

Covers:
- Strict numeric parsing (no locale commas, no NA tokens, finite only)
- Binary label parsing
- Range checks
- Identifier checks

Every failure raises ValidationError citing the 1-based data row and the column.
"""

import numpy as np
import pandas as pd

from utils.errors import ValidationError

# plain decimal or scientific notation; rejects "nan", "inf", "1,5", ""
NUMERIC_PATTERN = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"


def _as_stripped_strings(df: pd.DataFrame, column: str) -> pd.Series:
    col = df[column]
    missing = col.map(lambda v: not isinstance(v, str))
    if missing.any():
        raise ValidationError("missing value", row=int(col.index[missing.values][0]), column=column)
    return col.str.strip()


def parse_numeric_column(df: pd.DataFrame, column: str) -> np.ndarray:
    """Parse a column of raw strings into finite float64 values."""
    s = _as_stripped_strings(df, column)
    ok = s.str.fullmatch(NUMERIC_PATTERN)
    if not ok.all():
        bad = s.index[~ok.values][0]
        raise ValidationError(f"not a number: {s[bad]!r}", row=int(bad), column=column)

    values = pd.to_numeric(s).to_numpy(dtype=np.float64)
    finite = np.isfinite(values)
    if not finite.all():
        bad = s.index[~finite][0]
        raise ValidationError(f"value out of floating-point range: {s[bad]!r}", row=int(bad), column=column)
    return values


def parse_binary_column(df: pd.DataFrame, column: str) -> np.ndarray:
    """Parse a 0/1 label column into int8 values."""
    values = parse_numeric_column(df, column)
    binary = (values == 0.0) | (values == 1.0)
    if not binary.all():
        position = int(np.flatnonzero(~binary)[0])
        raise ValidationError(
            f"label must be 0 or 1, got {df[column].iloc[position].strip()!r}",
            row=int(df.index[position]),
            column=column,
        )
    return values.astype(np.int8)


def check_range(
    df: pd.DataFrame,
    column: str,
    values: np.ndarray,
    lower: float = -np.inf,
    upper: float = np.inf,
) -> np.ndarray:
    """Reject the first value outside [lower, upper]."""
    inside = (values >= lower) & (values <= upper)
    if not inside.all():
        position = int(np.flatnonzero(~inside)[0])
        raise ValidationError(
            f"value {float(values[position])!r} outside [{lower}, {upper}]",
            row=int(df.index[position]),
            column=column,
        )
    return values


def clean_id_column(df: pd.DataFrame, column: str = "id", unique: bool = True) -> pd.Series:
    """Strip identifiers; blank ids are rejected, and repeated ones when unique=True."""
    ids = _as_stripped_strings(df, column)
    blank = ids == ""
    if blank.any():
        raise ValidationError("blank identifier", row=int(ids.index[blank.values][0]), column=column)
    if unique:
        repeated = ids.duplicated(keep="first")
        if repeated.any():
            row = int(ids.index[repeated.values][0])
            raise ValidationError(f"duplicate id {ids[row]!r}", row=row, column=column)
    return ids
