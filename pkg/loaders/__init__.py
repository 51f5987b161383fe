from typing import Optional, TextIO

from .base_report_loader import ReportLoaderBase
from .json_report_loader import JsonReportLoader, parse_report
from .report_document import PAPER_PRINTED_LABEL, ReportDocument, ReportMode
from .text_report_loader import TextReportLoader

LOADERS = {
    "json": JsonReportLoader,
    "text": TextReportLoader,
}


def get_loader(output_format: str, stream: Optional[TextIO] = None) -> ReportLoaderBase:
    try:
        return LOADERS[output_format](stream)
    except KeyError:
        raise ValueError(f"unknown output format {output_format!r}; choose from {sorted(LOADERS)}") from None


__all__ = [
    "ReportLoaderBase",
    "JsonReportLoader",
    "TextReportLoader",
    "ReportDocument",
    "ReportMode",
    "PAPER_PRINTED_LABEL",
    "parse_report",
    "get_loader",
]
