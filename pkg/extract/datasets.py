"""
File-level entry points: read a CSV and return a validated dataset.
"""
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from config.settings import CLI_DEFAULTS
from extract.csv_extractor import CSVExtractor
from metrics.models import ClassificationDataset, RegressionDataset
from transform.classification_transformer import ClassificationTransformer
from transform.regression_transformer import RegressionTransformer
from utils.errors import ValidationError

PathLike = Union[str, Path]


class Schema(str, Enum):
    SUMMARY = "summary"
    REPLICATES = "replicates"


def load_regression_csv(
    path: PathLike,
    schema: Schema = Schema.SUMMARY,
    predictions: Optional[PathLike] = None,
    fallback_sigma: Optional[float] = None,
) -> RegressionDataset:
    """Summary files carry id, y_hat, y_bar, sigma. Replicate files carry
    id, replicate and need a separate predictions file with id, y_hat."""
    schema = Schema(schema)
    transformer = RegressionTransformer(fallback_sigma=fallback_sigma)

    if schema is Schema.SUMMARY:
        if predictions is not None:
            raise ValidationError("a predictions file is only used with the replicates schema")
        df = CSVExtractor(path).read(RegressionTransformer.SUMMARY_COLS)
        return transformer.transform_summary(df)

    if predictions is None:
        raise ValidationError("the replicates schema needs a predictions file (id, y_hat)")
    replicates = CSVExtractor(path).read(RegressionTransformer.REPLICATE_COLS)
    preds = CSVExtractor(predictions).read(RegressionTransformer.PREDICTION_COLS)
    return transformer.transform_replicates(replicates, preds)


def load_classification_csv(
    path: PathLike,
    alpha: float = CLI_DEFAULTS.threshold,
    q: float = 0.0,
) -> ClassificationDataset:
    df = CSVExtractor(path).read(ClassificationTransformer.COLUMNS)
    return ClassificationTransformer(alpha=alpha, q=q).transform(df)
