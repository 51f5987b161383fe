# transform/classification_transformer.py

import pandas as pd

from config.logging_conf import get_logger
from metrics.models import ClassificationDataset
from transform.utils_cleaning import check_range, clean_id_column, parse_binary_column, parse_numeric_column

logger = get_logger(__name__)


class ClassificationTransformer:
    """
    Transformer for binary classification tables (id, y, p_hat).

    The decision threshold alpha and the flip probability q are not part of
    the file; they come from the caller.
    """

    ID_COL = "id"
    COLUMNS = ["id", "y", "p_hat"]

    def __init__(self, alpha: float = 0.5, q: float = 0.0):
        self.alpha = alpha
        self.q = q

    def transform(self, df: pd.DataFrame) -> ClassificationDataset:
        clean_id_column(df, self.ID_COL)
        y = parse_binary_column(df, "y")
        p_hat = check_range(df, "p_hat", parse_numeric_column(df, "p_hat"), lower=0.0, upper=1.0)

        ds = ClassificationDataset.from_arrays(y.tolist(), p_hat.tolist(), alpha=self.alpha, q=self.q)
        logger.info("[ClassificationTransformer] M=%d alpha=%s q=%s", ds.size, ds.alpha, ds.q)
        return ds
