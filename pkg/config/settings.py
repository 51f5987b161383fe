"""
Centralized configuration settings for the error-aware metrics toolkit.

This module exposes typed config objects used across the project:
 - LOGGING: logging directory, file name and console level
 - NUMERICS: tolerances shared by the closed-form metric code
 - ORACLE_SETTINGS: Monte Carlo / quadrature defaults
 - CLI_DEFAULTS: command-line defaults (threshold, output format)
"""

import os
from pathlib import Path
from dataclasses import dataclass
from dotenv import load_dotenv

# -------------------------------------------------------------------
# Load environment variables (.env file)
# -------------------------------------------------------------------

BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(BASE_DIR / ".env")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}") from exc


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


# -------------------------------------------------------------------
# Logging Configuration
# -------------------------------------------------------------------

@dataclass(frozen=True)
class LoggingConfig:
    """Paths and levels used by the logging subsystem."""
    log_dir: Path = Path(os.getenv("METRICS_LOG_DIR", str(BASE_DIR / "logs")))
    log_file_name: str = "metrics.log"
    console_level: str = os.getenv("METRICS_LOG_LEVEL", "WARNING").upper()
    file_level: str = "INFO"
    log_to_file: bool = _env_bool("METRICS_LOG_TO_FILE", True)

    @property
    def log_file(self) -> Path:
        return self.log_dir / self.log_file_name

    def ensure_directories(self) -> None:
        # Create log directory if missing; idempotent
        if not self.log_dir.exists():
            self.log_dir.mkdir(parents=True, exist_ok=True)


LOGGING = LoggingConfig()

# -------------------------------------------------------------------
# Numerical tolerances
# -------------------------------------------------------------------

@dataclass(frozen=True)
class NumericsConfig:
    """Tolerances for the closed-form metric code."""
    # all sigma_i equal within this relative tolerance -> constant-sigma path
    homoscedastic_rtol: float = 1e-12
    # negative variances in [-rtol * sigma^2, 0) are clamped to zero
    variance_clamp_rtol: float = 1e-12
    # accuracy decomposition must match the affine formula this closely
    decomposition_atol: float = 1e-14
    # exhaustive flip enumeration visits 2**M vectors
    max_enumeration_size: int = 16


NUMERICS = NumericsConfig()

# -------------------------------------------------------------------
# Oracle defaults
# -------------------------------------------------------------------

@dataclass(frozen=True)
class OracleSettings:
    """Default parameters for the Monte Carlo and quadrature oracles."""
    n_samples: int = _env_int("METRICS_MC_SAMPLES", 100_000)
    seed: int = _env_int("METRICS_SEED", 0)
    quad_tolerance: float = 1e-12
    max_quad_depth: int = 60
    quad_initial_intervals: int = 8
    quad_max_intervals: int = 4000
    # draws per RNG stream; fixed so results do not depend on max_workers
    chunk_size: int = _env_int("METRICS_MC_CHUNK", 50_000)
    max_workers: int = _env_int("METRICS_MC_WORKERS", 1)
    # half-width of the quadrature window, in units of sigma
    truncation_sigmas: float = 12.0


ORACLE_SETTINGS = OracleSettings()

# -------------------------------------------------------------------
# CLI defaults
# -------------------------------------------------------------------

@dataclass(frozen=True)
class CLIConfig:
    """Defaults for the command-line front end."""
    threshold: float = 0.5
    output_format: str = "text"
    json_indent: int = 2
    formats: tuple = ("json", "text")


CLI_DEFAULTS = CLIConfig()

# -------------------------------------------------------------------
# Export Namespace
# -------------------------------------------------------------------

__all__ = [
    "BASE_DIR",
    "LOGGING",
    "NUMERICS",
    "ORACLE_SETTINGS",
    "CLI_DEFAULTS",
]
