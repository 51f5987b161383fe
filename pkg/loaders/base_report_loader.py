"""
Base class for report loaders.
Provides the shared write path and schema check; concrete loaders render.
"""

import sys
from abc import ABC, abstractmethod
from typing import Optional, TextIO

from config.logging_conf import get_logger
from loaders.report_document import REQUIRED_FIELDS, ReportDocument

logger = get_logger(__name__)


class ReportLoaderBase(ABC):
    """
    Writes ReportDocuments to a text stream (standard output by default).
    """

    EXPECTED_FIELDS = REQUIRED_FIELDS

    def __init__(self, stream: Optional[TextIO] = None):
        self.stream = stream

    @abstractmethod
    def render(self, document: ReportDocument) -> str:
        """Serialize one document, trailing newline included."""

    def load(self, document: ReportDocument) -> int:
        """
        Render and write the report.

        Returns:
            Number of characters written.
        """
        payload = document.to_dict()
        missing = [name for name in self.EXPECTED_FIELDS if name not in payload]
        if missing:
            raise ValueError(f"{self.__class__.__name__}: report is missing {missing}")

        text = self.render(document)
        stream = self.stream if self.stream is not None else sys.stdout
        stream.write(text)
        stream.flush()
        logger.info("%s wrote %d characters", self.__class__.__name__, len(text))
        return len(text)
