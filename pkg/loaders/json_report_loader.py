"""
JSON report output.

Floats are written with Python's shortest round-trip repr, so
parse_report(render(doc)) reproduces every double exactly.
"""

import json

from config.settings import CLI_DEFAULTS
from loaders.base_report_loader import ReportLoaderBase
from loaders.report_document import ReportDocument
from utils.errors import ValidationError


class JsonReportLoader(ReportLoaderBase):

    def render(self, document: ReportDocument) -> str:
        return json.dumps(document.to_dict(), indent=CLI_DEFAULTS.json_indent, allow_nan=False) + "\n"


def parse_report(text: str) -> ReportDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"report is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("report must be a JSON object")
    return ReportDocument.from_dict(data)
