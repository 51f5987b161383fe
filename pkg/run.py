"""Command-line entry point.

Evaluates MSE, MAE or accuracy on a CSV file while propagating label
measurement errors, and writes one report to standard output. Diagnostics go
to standard error.

Exit codes: 0 success, 1 internal error, 2 usage or input validation error.
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from config.logging_conf import get_logger, set_console_level
from config.settings import CLI_DEFAULTS, ORACLE_SETTINGS
from extract.datasets import Schema
from loaders import get_loader
from metrics.models import Metric
from oracle.models import MIN_SAMPLES
from pipelines.base_pipeline import EvaluationOptions
from pipelines.classification_pipeline import ClassificationPipeline
from pipelines.regression_pipeline import RegressionPipeline
from utils.errors import ValidationError

logger = get_logger("metrics.cli")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="run.py",
        description="Expected value and variance of MSE, MAE and accuracy under label noise.",
    )
    parser.add_argument("--metric", required=True, choices=[m.value for m in Metric])
    parser.add_argument("--input", required=True, metavar="PATH", help="CSV input file")
    parser.add_argument(
        "--schema",
        choices=[s.value for s in Schema],
        default=None,
        help="regression input layout (default: summary)",
    )
    parser.add_argument("--predictions", metavar="PATH", help="id,y_hat file for the replicates schema")
    parser.add_argument("--flip-prob", type=float, metavar="Q", help="label flip probability q in [0, 0.5]")
    parser.add_argument("--threshold", type=float, default=CLI_DEFAULTS.threshold, metavar="ALPHA",
                        help="decision threshold (default: %(default)s)")
    parser.add_argument("--fallback-sigma", type=float, metavar="VALUE",
                        help="sigma for observations with a single replicate")
    parser.add_argument("--mc-check", type=int, metavar="N", help="run the Monte Carlo oracle with N draws")
    parser.add_argument("--seed", type=int, default=ORACLE_SETTINGS.seed,
                        help="Monte Carlo seed (default: %(default)s)")
    parser.add_argument("--quad-check", action="store_true", help="verify per-observation moments by quadrature")
    parser.add_argument("--paper-compat", action="store_true",
                        help="also report variances in their printed closed form")
    parser.add_argument("--format", choices=list(CLI_DEFAULTS.formats), default=CLI_DEFAULTS.output_format)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")
    return parser


def _check_conflicts(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    metric = Metric(args.metric)
    if metric is Metric.ACCURACY:
        if args.flip_prob is None:
            parser.error("--metric accuracy requires --flip-prob")
        if args.quad_check:
            parser.error("--quad-check applies to mse and mae only")
        if args.schema is not None or args.predictions is not None or args.fallback_sigma is not None:
            parser.error("--schema, --predictions and --fallback-sigma apply to mse and mae only")
    else:
        if args.flip_prob is not None:
            parser.error("--flip-prob applies to --metric accuracy only")
        schema = Schema(args.schema or Schema.SUMMARY)
        if schema is Schema.SUMMARY and args.predictions is not None:
            parser.error("--predictions is only used with --schema replicates")
        if schema is Schema.SUMMARY and args.fallback_sigma is not None:
            parser.error("--fallback-sigma is only used with --schema replicates")
        if schema is Schema.REPLICATES and args.predictions is None:
            parser.error("--schema replicates requires --predictions")
    if args.mc_check is not None and args.mc_check < MIN_SAMPLES:
        parser.error(f"--mc-check needs at least {MIN_SAMPLES} draws")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")


def _build_pipeline(args: argparse.Namespace, stdout: Optional[TextIO]):
    options = EvaluationOptions(
        metric=args.metric,
        mc_samples=args.mc_check,
        seed=args.seed,
        quad_check=args.quad_check,
        paper_compat=args.paper_compat,
    )
    loader = get_loader(args.format, stdout)
    if options.metric is Metric.ACCURACY:
        return ClassificationPipeline(args.input, options, loader, q=args.flip_prob, alpha=args.threshold)
    return RegressionPipeline(
        args.input,
        options,
        loader,
        schema=args.schema or Schema.SUMMARY,
        predictions_path=args.predictions,
        fallback_sigma=args.fallback_sigma,
    )


def run_cli(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_conflicts(parser, args)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.verbose:
        set_console_level(logging.DEBUG if args.verbose > 1 else logging.INFO)

    try:
        _build_pipeline(args, stdout).run()
    except ValidationError as exc:
        logger.error("invalid input: %s", exc)
        return EXIT_USAGE
    except Exception:
        logger.exception("evaluation failed")
        return EXIT_INTERNAL
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
