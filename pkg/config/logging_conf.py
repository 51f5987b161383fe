"""
Logging configuration for the metrics toolkit.

This module defines:
- Rotating log file (prevents unlimited log growth)
- Console logging on standard error (standard output is reserved for reports)
- Standardized log format
- Centralized logger creation used by all modules
"""
import logging
import logging.handlers
import sys

from config.settings import LOGGING

# -------------------------------------------------------------------
# 1. Formatter
# -------------------------------------------------------------------
FORMAT = (
    "%(asctime)s | %(levelname)s | %(name)s | "
    "%(funcName)s | line %(lineno)d | %(message)s"
)

formatter = logging.Formatter(FORMAT)


# -------------------------------------------------------------------
# 2. File Handler (rotating, optional)
# -------------------------------------------------------------------
def _build_file_handler():
    if not LOGGING.log_to_file:
        return None
    try:
        LOGGING.ensure_directories()
        handler = logging.handlers.RotatingFileHandler(
            filename=LOGGING.log_file,
            maxBytes=10 * 1024 * 1024,   # 10 MB per file
            backupCount=5,               # keep 5 old logs
            encoding="utf-8",
        )
    except OSError:
        # read-only checkouts still get console logging
        return None
    handler.setFormatter(formatter)
    handler.setLevel(LOGGING.file_level)
    return handler


file_handler = _build_file_handler()


# -------------------------------------------------------------------
# 3. Console Handler (stderr)
# -------------------------------------------------------------------
console_handler = logging.StreamHandler(stream=sys.stderr)
console_handler.setFormatter(formatter)
console_handler.setLevel(LOGGING.console_level)


# -------------------------------------------------------------------
# 4. Logger Factory Function
# -------------------------------------------------------------------
def get_logger(name: str) -> logging.Logger:
    """Return a preconfigured logger for any module."""
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    # Avoid adding handlers multiple times
    if not logger.handlers:
        if file_handler is not None:
            logger.addHandler(file_handler)
        logger.addHandler(console_handler)

    logger.propagate = False
    return logger


def set_console_level(level) -> None:
    """Adjust console verbosity at runtime (used by the CLI)."""
    console_handler.setLevel(level)
