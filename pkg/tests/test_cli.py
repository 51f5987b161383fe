import io
import json

import pytest

from loaders import parse_report
from run import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, run_cli


def invoke(*argv):
    out = io.StringIO()
    code = run_cli([str(a) for a in argv], stdout=out)
    return code, out.getvalue()


class TestAccuracy:
    def test_worked_example(self, fixtures_dir):
        code, out = invoke(
            "--metric", "accuracy", "--input", fixtures_dir / "classification_a085.csv",
            "--flip-prob", "0.05", "--format", "json",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["classical"] == 0.85
        assert report["expected"] == pytest.approx(0.815, abs=1e-15)
        assert report["mode"]["variance_convention"] == "oracle-consistent"
        assert report["confusion"]["tp"] + report["confusion"]["tn"] == 17
        assert "enumeration" not in report
        assert report["input_digest"] == {"n_observations": 20, "q": 0.05, "alpha": 0.5}

    def test_small_file_carries_enumeration(self, fixtures_dir):
        code, out = invoke(
            "--metric", "accuracy", "--input", fixtures_dir / "classification.csv",
            "--flip-prob", "0.1", "--format", "json", "--paper-compat",
        )
        assert code == EXIT_OK
        report = parse_report(out)
        assert report.enumeration["n_vectors"] == 16
        assert report.enumeration["expected"] == pytest.approx(report.expected, abs=1e-14)
        assert report.paper_printed["label"] == "paper-printed form"

    def test_requires_flip_probability(self, fixtures_dir):
        code, out = invoke("--metric", "accuracy", "--input", fixtures_dir / "classification.csv")
        assert code == EXIT_USAGE
        assert out == ""

    def test_out_of_range_flip_probability(self, fixtures_dir):
        code, _ = invoke("--metric", "accuracy", "--input", fixtures_dir / "classification.csv", "--flip-prob", "0.7")
        assert code == EXIT_USAGE


class TestRegression:
    def test_zero_sigma_has_no_correction(self, fixtures_dir):
        code, out = invoke("--metric", "mse", "--input", fixtures_dir / "regression_zero_sigma.csv", "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["correction"] == 0.0
        assert report["classical"] == report["expected"]
        assert report["variance"] == 0.0

    def test_text_is_default(self, fixtures_dir):
        code, out = invoke("--metric", "mae", "--input", fixtures_dir / "regression_summary.csv")
        assert code == EXIT_OK
        assert out.startswith("metric                  mae\n")

    def test_constant_sigma_digest(self, fixtures_dir):
        code, out = invoke(
            "--metric", "mse", "--input", fixtures_dir / "regression_constant_sigma.csv", "--format", "json"
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["mode"]["homoscedastic"] is True
        assert report["input_digest"]["sigma_min"] == report["input_digest"]["sigma_max"] == 0.5
        assert "noncentrality" in report

    def test_replicates_schema(self, fixtures_dir):
        code, out = invoke(
            "--metric", "mse", "--input", fixtures_dir / "replicates.csv", "--schema", "replicates",
            "--predictions", fixtures_dir / "predictions.csv", "--format", "json",
        )
        assert code == EXIT_OK
        assert json.loads(out)["input_digest"]["n_observations"] == 3

    def test_quad_check(self, fixtures_dir):
        code, out = invoke(
            "--metric", "mae", "--input", fixtures_dir / "regression_summary.csv", "--quad-check", "--format", "json"
        )
        assert code == EXIT_OK
        section = json.loads(out)["quadrature"]
        assert section["n_observations"] == 2
        assert section["max_abs_deviation"] <= 1e-10

    def test_mc_check_is_deterministic(self, fixtures_dir):
        argv = (
            "--metric", "mae", "--input", fixtures_dir / "regression_summary.csv",
            "--mc-check", "200000", "--seed", "42", "--format", "json",
        )
        first = invoke(*argv)
        second = invoke(*argv)
        assert first[0] == EXIT_OK
        assert first[1] == second[1]
        oracle = json.loads(first[1])["oracle"]
        assert oracle["seed"] == 42
        assert abs(oracle["z_score"]) <= 4

    def test_paper_compat_mae(self, fixtures_dir):
        code, out = invoke(
            "--metric", "mae", "--input", fixtures_dir / "regression_summary.csv", "--paper-compat", "--format", "json"
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["mode"]["paper_compat"] is True
        assert report["paper_printed"]["variance"] != report["variance"]


class TestErrors:
    @pytest.mark.parametrize("name", ["bad_negative_sigma.csv", "bad_nan.csv", "bad_missing_header.csv", "bad_duplicate_id.csv"])
    def test_malformed_input_exits_2(self, fixtures_dir, name):
        code, out = invoke("--metric", "mse", "--input", fixtures_dir / name)
        assert code == EXIT_USAGE
        assert out == ""

    @pytest.mark.parametrize(
        "extra",
        [
            ["--metric", "mse", "--predictions", "p.csv"],
            ["--metric", "mse", "--schema", "replicates"],
            ["--metric", "mse", "--fallback-sigma", "0.1"],
            ["--metric", "mse", "--flip-prob", "0.1"],
            ["--metric", "accuracy", "--flip-prob", "0.1", "--quad-check"],
            ["--metric", "mse", "--mc-check", "10"],
            ["--metric", "rmse"],
            ["--metric", "mse", "--bogus"],
        ],
    )
    def test_usage_errors(self, fixtures_dir, extra):
        code, out = invoke("--input", fixtures_dir / "regression_summary.csv", *extra)
        assert code == EXIT_USAGE
        assert out == ""

    def test_help_exits_zero(self):
        code, _ = invoke("--help")
        assert code == EXIT_OK

    def test_internal_error_exits_1(self, fixtures_dir, monkeypatch):
        def boom(*args, **kwargs):
            raise RuntimeError("unexpected")

        monkeypatch.setattr("pipelines.regression_pipeline.mse_report", boom)
        code, out = invoke("--metric", "mse", "--input", fixtures_dir / "regression_summary.csv")
        assert code == EXIT_INTERNAL
        assert out == ""
