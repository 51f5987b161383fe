import os
from pathlib import Path

# keep test runs from writing logs/metrics.log
os.environ.setdefault("METRICS_LOG_TO_FILE", "0")

import pytest

from metrics.models import ClassificationDataset, RegressionDataset

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run full-size acceptance tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def two_point_dataset() -> RegressionDataset:
    # y_bar=[0, 2], y_hat=[1, 2], sigma=[1, 2]
    return RegressionDataset.from_arrays([1.0, 2.0], [0.0, 2.0], [1.0, 2.0])


@pytest.fixture
def constant_sigma_dataset() -> RegressionDataset:
    return RegressionDataset.from_arrays([1.0, 0.0, 2.5, -1.0], [0.0, 1.0, 2.0, -0.25], [0.5] * 4)


@pytest.fixture
def accuracy_085_dataset() -> ClassificationDataset:
    """20 observations with 17 classified correctly, q = 0.05."""
    y = [1] * 10 + [0] * 10
    p_hat = [0.9] * 9 + [0.1] + [0.1] * 8 + [0.8, 0.7]
    return ClassificationDataset.from_arrays(y, p_hat, alpha=0.5, q=0.05)
