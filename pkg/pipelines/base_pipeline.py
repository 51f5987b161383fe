# pipelines/base_pipeline.py

"""
Base class for all evaluation pipelines.
Defines the standard interface: extract, transform, evaluate, load.
Child classes must implement these methods; run() chains them.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from config.logging_conf import get_logger
from config.settings import ORACLE_SETTINGS
from metrics.models import Metric
from oracle.models import OracleConfig

logger = get_logger(__name__)


@dataclass(frozen=True)
class EvaluationOptions:
    """What to compute on top of the closed-form report."""
    metric: Metric
    mc_samples: Optional[int] = None   # None disables the Monte Carlo check
    seed: int = ORACLE_SETTINGS.seed
    quad_check: bool = False
    paper_compat: bool = False

    def __post_init__(self):
        object.__setattr__(self, "metric", Metric(self.metric))

    def oracle_config(self) -> OracleConfig:
        return OracleConfig(n_samples=self.mc_samples, seed=self.seed)


class EvaluationPipelineBase(ABC):

    @abstractmethod
    def extract(self):
        """Read the input files into a validated dataset"""

    @abstractmethod
    def transform(self, extracted):
        """Compute the closed-form report for the dataset"""

    @abstractmethod
    def evaluate(self, extracted, transformed):
        """Attach oracle checks and build the ReportDocument"""

    @abstractmethod
    def load(self, document):
        """Write the document through the configured loader"""

    def run(self):
        name = self.__class__.__name__
        try:
            logger.info("Starting pipeline: %s", name)
            dataset = self.extract()
            logger.info("%s: extracted M=%d", name, len(dataset))

            report = self.transform(dataset)
            logger.info("%s: closed-form report ready", name)

            document = self.evaluate(dataset, report)
            written = self.load(document)
            logger.info("%s: wrote report (%d characters)", name, written)
            return document
        except Exception:
            logger.debug("Pipeline %s failed", name, exc_info=True)
            raise
