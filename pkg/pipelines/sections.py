from typing import Any, Dict

from oracle.models import OracleConfig, OracleReport


def oracle_section(report: OracleReport, cfg: OracleConfig) -> Dict[str, Any]:
    return {
        "estimate": report.estimate,
        "standard_error": report.standard_error,
        "z_score": report.z_score,
        "variance_estimate": report.variance_estimate,
        "variance_standard_error": report.variance_standard_error,
        "variance_z_score": report.variance_z_score,
        "n_samples": report.n_effective,
        "seed": cfg.seed,
    }
