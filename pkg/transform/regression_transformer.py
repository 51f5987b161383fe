# transform/regression_transformer.py

from typing import Optional

import pandas as pd

from config.logging_conf import get_logger
from metrics.models import RegressionDataset
from transform.replicates import ReplicateTable, reduce_replicates
from transform.utils_cleaning import check_range, clean_id_column, parse_numeric_column
from utils.errors import ValidationError

logger = get_logger(__name__)


class RegressionTransformer:
    """
    Turns raw regression tables into a RegressionDataset.

    Responsibilities:
    - Summary schema: one row per observation (id, y_hat, y_bar, sigma)
    - Replicates schema: repeated label measurements (id, replicate) joined
      with a predictions table (id, y_hat)
    - Strict numeric parsing with row-numbered errors
    """

    ID_COL = "id"
    SUMMARY_COLS = ["id", "y_hat", "y_bar", "sigma"]
    REPLICATE_COLS = ["id", "replicate"]
    PREDICTION_COLS = ["id", "y_hat"]

    def __init__(self, fallback_sigma: Optional[float] = None):
        self.fallback_sigma = fallback_sigma

    def transform_summary(self, df: pd.DataFrame) -> RegressionDataset:
        clean_id_column(df, self.ID_COL)
        y_hat = parse_numeric_column(df, "y_hat")
        y_bar = parse_numeric_column(df, "y_bar")
        sigma = check_range(df, "sigma", parse_numeric_column(df, "sigma"), lower=0.0)

        ds = RegressionDataset.from_arrays(y_hat, y_bar, sigma)
        logger.info("[RegressionTransformer] summary table -> M=%d (%s)", ds.size, ds.sigma_mode.value)
        return ds

    def transform_replicates(self, replicates: pd.DataFrame, predictions: pd.DataFrame) -> RegressionDataset:
        """
        Reduce replicates per id and pair them with predictions.

        The dataset follows the row order of the predictions table; every
        prediction id needs replicates and every replicate id needs a prediction.
        """
        ids = clean_id_column(replicates, self.ID_COL, unique=False)
        values = parse_numeric_column(replicates, "replicate")
        pred_ids = clean_id_column(predictions, self.ID_COL)
        y_hat = parse_numeric_column(predictions, "y_hat")

        predicted, measured = set(pred_ids), set(ids)
        for row, obs_id in ids.items():
            if obs_id not in predicted:
                raise ValidationError(
                    f"replicates for id {obs_id!r} have no prediction", row=int(row), column=self.ID_COL
                )
        for row, obs_id in pred_ids.items():
            if obs_id not in measured:
                raise ValidationError(f"no replicates for id {obs_id!r}", row=int(row), column=self.ID_COL)

        reduced = reduce_replicates(ReplicateTable.from_columns(ids, values), self.fallback_sigma)
        ordered = reduced.set_index("id").loc[list(pred_ids)]
        ds = RegressionDataset.from_arrays(
            y_hat,
            ordered["y_bar"].to_numpy(),
            ordered["sigma"].to_numpy(),
        )
        logger.info(
            "[RegressionTransformer] %d replicates -> M=%d (%s)",
            len(replicates), ds.size, ds.sigma_mode.value,
        )
        return ds
