"""Pipeline: Accuracy under label flips
- Extracts an (id, y, p_hat) CSV, computes the corrected accuracy and its
  confusion-matrix decomposition, optionally checks it by Monte Carlo and,
  for small datasets, by exhaustive flip enumeration.
"""

from pathlib import Path
from typing import Any, Dict, Union

from config.logging_conf import get_logger
from config.settings import CLI_DEFAULTS, NUMERICS
from extract.datasets import load_classification_csv
from loaders.base_report_loader import ReportLoaderBase
from loaders.report_document import PAPER_PRINTED_LABEL, ReportDocument, ReportMode
from metrics.classification import accuracy_decomposition
from metrics.models import ClassificationDataset, ClassificationMetricReport, Metric
from oracle.enumeration import enumerate_flip_moments
from oracle.monte_carlo import mc_accuracy
from pipelines.base_pipeline import EvaluationOptions, EvaluationPipelineBase
from pipelines.sections import oracle_section

logger = get_logger(__name__)


def classification_digest(ds: ClassificationDataset) -> Dict[str, Any]:
    return {"n_observations": ds.size, "q": ds.q, "alpha": ds.alpha}


class ClassificationPipeline(EvaluationPipelineBase):
    def __init__(
        self,
        input_path: Union[str, Path],
        options: EvaluationOptions,
        loader: ReportLoaderBase,
        q: float,
        alpha: float = CLI_DEFAULTS.threshold,
    ):
        super().__init__()
        if options.metric is not Metric.ACCURACY:
            raise ValueError(f"ClassificationPipeline cannot evaluate {options.metric.value!r}")
        self.input_path = input_path
        self.options = options
        self.loader = loader
        self.q = q
        self.alpha = alpha

    def extract(self) -> ClassificationDataset:
        return load_classification_csv(self.input_path, alpha=self.alpha, q=self.q)

    def transform(self, extracted: ClassificationDataset) -> ClassificationMetricReport:
        return accuracy_decomposition(extracted, paper_compat=self.options.paper_compat)

    def evaluate(self, extracted: ClassificationDataset, transformed: ClassificationMetricReport) -> ReportDocument:
        opts = self.options
        oracle = None
        if opts.mc_samples is not None:
            cfg = opts.oracle_config()
            oracle = oracle_section(mc_accuracy(extracted, cfg), cfg)

        enumeration = None
        if extracted.size <= NUMERICS.max_enumeration_size:
            expected, variance, n_vectors = enumerate_flip_moments(extracted)
            enumeration = {"expected": expected, "variance": variance, "n_vectors": n_vectors}
        else:
            logger.debug("M=%d exceeds enumeration limit; skipping", extracted.size)

        paper_printed = None
        if transformed.paper_printed_variance is not None:
            paper_printed = {"label": PAPER_PRINTED_LABEL, "variance": transformed.paper_printed_variance}

        counts = transformed.confusion
        return ReportDocument(
            metric=Metric.ACCURACY.value,
            classical=transformed.classical_accuracy,
            expected=transformed.corrected.expected,
            variance=transformed.corrected.variance,
            std=transformed.corrected.std,
            correction=transformed.correction,
            mode=ReportMode(
                homoscedastic=None,
                paper_compat=opts.paper_compat,
                variance_convention=transformed.variance_convention.value,
            ),
            input_digest=classification_digest(extracted),
            oracle=oracle,
            paper_printed=paper_printed,
            confusion={"tp": counts.tp, "tn": counts.tn, "fp": counts.fp, "fn": counts.fn},
            enumeration=enumeration,
        )

    def load(self, document: ReportDocument) -> int:
        return self.loader.load(document)
