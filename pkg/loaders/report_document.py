"""
ReportDocument: the serializable result of one evaluation.

Field names are fixed:
  metric, classical, expected, variance, std, correction, mode, input_digest
plus the optional sections oracle, paper_printed, quadrature, confusion,
enumeration and noncentrality, which are omitted when absent.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from utils.errors import ValidationError

PAPER_PRINTED_LABEL = "paper-printed form"

REQUIRED_FIELDS = (
    "metric",
    "classical",
    "expected",
    "variance",
    "std",
    "correction",
    "mode",
    "input_digest",
)
OPTIONAL_FIELDS = (
    "noncentrality",
    "oracle",
    "paper_printed",
    "quadrature",
    "confusion",
    "enumeration",
)


@dataclass(frozen=True)
class ReportMode:
    homoscedastic: Optional[bool]
    paper_compat: bool = False
    variance_convention: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "homoscedastic": self.homoscedastic,
            "paper_compat": self.paper_compat,
            "variance_convention": self.variance_convention,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportMode":
        return cls(
            homoscedastic=data.get("homoscedastic"),
            paper_compat=bool(data.get("paper_compat", False)),
            variance_convention=data.get("variance_convention"),
        )


@dataclass(frozen=True)
class ReportDocument:
    metric: str
    classical: float
    expected: float
    variance: float
    std: float
    correction: float
    mode: ReportMode
    input_digest: Dict[str, Any]
    noncentrality: Optional[float] = None
    oracle: Optional[Dict[str, Any]] = None
    paper_printed: Optional[Dict[str, Any]] = None
    quadrature: Optional[Dict[str, Any]] = None
    confusion: Optional[Dict[str, int]] = None
    enumeration: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "metric": self.metric,
            "classical": self.classical,
            "expected": self.expected,
            "variance": self.variance,
            "std": self.std,
            "correction": self.correction,
            "mode": self.mode.to_dict(),
            "input_digest": dict(self.input_digest),
        }
        for name in OPTIONAL_FIELDS:
            value = getattr(self, name)
            if value is not None:
                out[name] = dict(value) if isinstance(value, dict) else value
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportDocument":
        missing = [name for name in REQUIRED_FIELDS if name not in data]
        if missing:
            raise ValidationError(f"report is missing field(s) {missing}")
        unknown = set(data) - set(REQUIRED_FIELDS) - set(OPTIONAL_FIELDS)
        if unknown:
            raise ValidationError(f"report has unknown field(s) {sorted(unknown)}")
        return cls(
            metric=data["metric"],
            classical=data["classical"],
            expected=data["expected"],
            variance=data["variance"],
            std=data["std"],
            correction=data["correction"],
            mode=ReportMode.from_dict(data["mode"]),
            input_digest=dict(data["input_digest"]),
            **{name: data.get(name) for name in OPTIONAL_FIELDS},
        )
