"""
Base reporter interface for StabiLens.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional
from ..core.types import CatalogReport

class BaseReporter(ABC):
    """Abstract base class for report generators."""

    def __init__(self, config=None):
        self.config = config

    @abstractmethod
    def render(self, report: CatalogReport) -> str:
        """Report content as text."""
        pass

    @abstractmethod
    def get_format(self) -> str:
        """Get the report format (csv, json, console, markdown)."""
        pass

    def generate(self, report: CatalogReport, output_path: Optional[str] = None) -> str:
        """Write the report to ``output_path``, or return its content when no path is given."""
        content = self.render(report)
        if output_path is None:
            return content
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8', newline='') as f:
            f.write(content)
        return f"{self.get_format().upper()} report saved to {output_path}"
