"""CSVExtractor
- Reads a comma-separated, UTF-8 file with a mandatory header row into a
  pandas.DataFrame of raw strings (no type inference, no NA coercion).
- Header names are stripped and lower-cased; blank or duplicate header cells
  are rejected instead of renamed.
- Row numbers used in error messages are 1-based data rows (header excluded).
  Blank lines are rejected so that row numbers match positions in the file.
"""
from pathlib import Path
from typing import Iterable, List, Union

import pandas as pd

from config.logging_conf import get_logger
from utils.errors import EmptyDatasetError, ValidationError

logger = get_logger(__name__)


class CSVExtractor:
    """
    Extractor for one CSV file.

    Usage:
      extractor = CSVExtractor("labels.csv")
      df = extractor.read(required_columns=["id", "y_hat", "y_bar", "sigma"])
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def _check_blank_lines(self) -> None:
        # row numbers must match positions in the file
        try:
            lines = self.path.read_text(encoding="utf-8").splitlines()
        except UnicodeDecodeError as exc:
            raise ValidationError(f"{self.path.name}: file is not valid UTF-8") from exc
        for line_no, line in enumerate(lines, start=1):
            if line.strip() == "":
                if line_no == 1:
                    raise ValidationError(f"{self.path.name}: blank line before the header row")
                raise ValidationError(f"blank line in {self.path.name}", row=line_no - 1)

    def _read_raw(self) -> pd.DataFrame:
        if not self.path.is_file():
            raise ValidationError(f"input file not found: {self.path}")
        self._check_blank_lines()
        try:
            return pd.read_csv(
                self.path,
                header=None,
                dtype=str,
                keep_default_na=False,
                na_filter=False,
                skip_blank_lines=False,
                encoding="utf-8",
                sep=",",
            )
        except pd.errors.EmptyDataError as exc:
            raise ValidationError(f"{self.path.name}: file is empty (header row required)") from exc
        except pd.errors.ParserError as exc:
            raise ValidationError(f"{self.path.name}: malformed CSV ({exc})") from exc
        except UnicodeDecodeError as exc:
            raise ValidationError(f"{self.path.name}: file is not valid UTF-8") from exc

    @staticmethod
    def _normalize_headers(cells: Iterable) -> List[str]:
        return ["" if not isinstance(cell, str) else cell.strip().lower() for cell in cells]

    @staticmethod
    def _check_headers(headers: List[str]) -> None:
        seen = set()
        for position, name in enumerate(headers, start=1):
            if name == "":
                raise ValidationError(f"blank header cell in column {position}")
            if name in seen:
                raise ValidationError(f"duplicate header '{name}'")
            seen.add(name)

    def read(self, required_columns: Iterable[str] = ()) -> pd.DataFrame:
        """Return the data rows as strings, indexed 1..n.

        Steps:
            1. Parse the file without a header so nothing is renamed.
            2. Validate the first row as the header.
            3. Check required columns and reject files without data rows.
        """
        raw = self._read_raw()
        headers = self._normalize_headers(raw.iloc[0].tolist())
        required = list(required_columns)

        missing = [c for c in required if c not in headers]
        if missing:
            # a file whose first row is data rather than names lands here too
            raise ValidationError(
                f"{self.path.name}: missing column(s) {missing}; header row must name {required}"
            )
        self._check_headers(headers)

        df = raw.iloc[1:].copy()
        df.columns = headers
        df.index = pd.RangeIndex(1, len(df) + 1)
        if df.empty:
            raise EmptyDatasetError()

        logger.info("Read %d data rows from %s", len(df), self.path)
        return df
