"""Pipeline: Regression metrics (MSE / MAE)
- Extracts a summary or replicates CSV, computes the error-aware report,
  optionally checks it against Monte Carlo and quadrature, writes the report.
- Follows the pipeline contract: extract -> transform -> evaluate -> load.
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from config.logging_conf import get_logger
from extract.datasets import Schema, load_regression_csv
from loaders.base_report_loader import ReportLoaderBase
from loaders.report_document import PAPER_PRINTED_LABEL, ReportDocument, ReportMode
from metrics.models import Metric, RegressionDataset, RegressionMetricReport
from metrics.regression import mae_report, mse_report
from metrics.special_functions import FoldedNormalParams, folded_normal_mean
from oracle.monte_carlo import mc_regression_metric
from oracle.quadrature import quad_expected_abs_residual, quad_expected_sq_residual
from pipelines.base_pipeline import EvaluationOptions, EvaluationPipelineBase
from pipelines.sections import oracle_section

logger = get_logger(__name__)


def regression_digest(ds: RegressionDataset) -> Dict[str, Any]:
    return {
        "n_observations": ds.size,
        "sigma_min": float(ds.sigma.min()),
        "sigma_max": float(ds.sigma.max()),
        "sigma_mean": float(ds.sigma.mean()),
        "homoscedastic": bool(ds.is_homoscedastic),
    }


def quadrature_section(ds: RegressionDataset, metric: Metric) -> Dict[str, Any]:
    """Largest |quadrature - closed form| over the observations with sigma > 0."""
    deviations = []
    for obs in ds.observations:
        if obs.sigma == 0:
            continue
        d = obs.residual_mean
        if metric is Metric.MSE:
            deviations.append(abs(quad_expected_sq_residual(obs) - (d * d + obs.sigma * obs.sigma)))
        else:
            closed = folded_normal_mean(FoldedNormalParams(d, obs.sigma))
            deviations.append(abs(quad_expected_abs_residual(obs) - closed))
    return {
        "max_abs_deviation": max(deviations, default=0.0),
        "n_observations": len(deviations),
    }


class RegressionPipeline(EvaluationPipelineBase):
    def __init__(
        self,
        input_path: Union[str, Path],
        options: EvaluationOptions,
        loader: ReportLoaderBase,
        schema: Schema = Schema.SUMMARY,
        predictions_path: Optional[Union[str, Path]] = None,
        fallback_sigma: Optional[float] = None,
    ):
        super().__init__()
        if not options.metric.is_regression:
            raise ValueError(f"RegressionPipeline cannot evaluate {options.metric.value!r}")
        self.input_path = input_path
        self.options = options
        self.loader = loader
        self.schema = Schema(schema)
        self.predictions_path = predictions_path
        self.fallback_sigma = fallback_sigma

    def extract(self) -> RegressionDataset:
        return load_regression_csv(
            self.input_path,
            self.schema,
            predictions=self.predictions_path,
            fallback_sigma=self.fallback_sigma,
        )

    def transform(self, extracted: RegressionDataset) -> RegressionMetricReport:
        if self.options.metric is Metric.MSE:
            return mse_report(extracted)
        return mae_report(extracted, paper_compat=self.options.paper_compat)

    def evaluate(self, extracted: RegressionDataset, transformed: RegressionMetricReport) -> ReportDocument:
        opts = self.options
        oracle = None
        if opts.mc_samples is not None:
            cfg = opts.oracle_config()
            oracle = oracle_section(mc_regression_metric(extracted, opts.metric, cfg), cfg)

        quadrature = quadrature_section(extracted, opts.metric) if opts.quad_check else None
        if quadrature is not None:
            logger.info("quadrature check: max deviation %.3e", quadrature["max_abs_deviation"])

        paper_printed = None
        if transformed.paper_printed_variance is not None:
            paper_printed = {"label": PAPER_PRINTED_LABEL, "variance": transformed.paper_printed_variance}

        return ReportDocument(
            metric=transformed.metric,
            classical=transformed.classical,
            expected=transformed.corrected.expected,
            variance=transformed.corrected.variance,
            std=transformed.corrected.std,
            correction=transformed.correction,
            mode=ReportMode(
                homoscedastic=bool(extracted.is_homoscedastic),
                paper_compat=opts.paper_compat,
            ),
            input_digest=regression_digest(extracted),
            noncentrality=transformed.noncentrality,
            oracle=oracle,
            paper_printed=paper_printed,
            quadrature=quadrature,
        )

    def load(self, document: ReportDocument) -> int:
        return self.loader.load(document)
