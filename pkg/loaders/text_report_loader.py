"""
Human-readable report output: one "key  value" line per field, with the
optional sections indented underneath their name.
"""

from typing import Any, Dict, List

from loaders.base_report_loader import ReportLoaderBase
from loaders.report_document import OPTIONAL_FIELDS, ReportDocument

KEY_WIDTH = 24


def _format_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _section(name: str, values: Dict[str, Any]) -> List[str]:
    lines = [f"{name}:"]
    for key, value in values.items():
        lines.append(f"  {key:<{KEY_WIDTH - 2}}{_format_value(value)}")
    return lines


class TextReportLoader(ReportLoaderBase):

    def render(self, document: ReportDocument) -> str:
        data = document.to_dict()
        lines = []
        for key in ("metric", "classical", "expected", "variance", "std", "correction"):
            lines.append(f"{key:<{KEY_WIDTH}}{_format_value(data[key])}")
        lines.extend(_section("mode", data["mode"]))
        lines.extend(_section("input", data["input_digest"]))
        for name in OPTIONAL_FIELDS:
            if name not in data:
                continue
            value = data[name]
            if isinstance(value, dict):
                lines.extend(_section(name, value))
            else:
                lines.append(f"{name:<{KEY_WIDTH}}{_format_value(value)}")
        return "\n".join(lines) + "\n"
