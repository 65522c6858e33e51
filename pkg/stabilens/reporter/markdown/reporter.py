"""
Markdown reporter for StabiLens.
"""

from typing import Dict, Any
from ...core.types import CatalogReport
from ..base import BaseReporter
from ..common import RecordConverter

class MarkdownReporter(BaseReporter):
    """Markdown table of catalog entries."""

    def render(self, report: CatalogReport) -> str:
        markdown = self._generate_header(report.report_info)
        markdown += self._generate_table(report)
        markdown += self._generate_footer(report.report_info)
        return markdown

    def _generate_header(self, info: Dict[str, Any]) -> str:
        title = info.get('caption') or info.get('table') or 'StabiLens catalog'
        return f"# {title}\n\n"

    def _generate_table(self, report: CatalogReport) -> str:
        lines = [
            "| Code | q | N | K | >= D | Rule |",
            "|------|---|---|---|------|------|",
        ]
        for entry in report.entries:
            rule = RecordConverter.rule_label(entry).replace('|', '\\|')
            lines.append(f"| {entry.params} | {entry.q} | {entry.N} | {entry.K} | {entry.D} | {rule} |")
        return '\n'.join(lines) + '\n'

    def _generate_footer(self, info: Dict[str, Any]) -> str:
        return f"\n*{info.get('rows', 0)} rows, generated by StabiLens*\n"

    def get_format(self) -> str:
        """Get report format."""
        return "markdown"
