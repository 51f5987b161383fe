# extract/__init__.py
from .csv_extractor import CSVExtractor
from .datasets import Schema, load_classification_csv, load_regression_csv

__all__ = ["CSVExtractor", "Schema", "load_classification_csv", "load_regression_csv"]
