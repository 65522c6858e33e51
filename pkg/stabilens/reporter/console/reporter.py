"""
Console reporter for StabiLens.
"""

from rich.console import Console
from rich.table import Table
from ...core.config import config as default_config
from ...core.types import CatalogReport
from ..base import BaseReporter
from ..common import RecordConverter

MARKER_STYLES = {'*': 'bold green', 'L': 'cyan', 'S': 'magenta'}

class ConsoleReporter(BaseReporter):
    """Rich table of catalog entries."""

    def __init__(self, config=None, console: Console = None):
        super().__init__(config)
        self.console = console or Console()

    def build_table(self, report: CatalogReport) -> Table:
        info = report.report_info
        limit = (self.config or default_config).reporter.max_console_rows
        table = Table(title=info.get('caption') or info.get('table') or 'Catalog',
                      caption=f"{len(report.entries)} rows")
        table.add_column("Code", style="bold")
        table.add_column("q", justify="right")
        table.add_column("N", justify="right")
        table.add_column("K", justify="right")
        table.add_column(">= D", justify="right")
        table.add_column("Rule")
        table.add_column("Chain", style="dim", overflow="fold")

        for entry in report.entries[:limit]:
            row = RecordConverter.entry_to_row(entry)
            style = MARKER_STYLES.get(row['rule'], 'yellow' if 'ambiguous' in row['rule'] else 'white')
            table.add_row(
                str(entry.params), str(entry.q), str(entry.N), str(entry.K), str(entry.D),
                f"[{style}]{row['rule']}[/{style}]",
                row['chain'],
            )
        if len(report.entries) > limit:
            table.add_row("...", "", "", "", "", f"[dim]{len(report.entries) - limit} more[/dim]", "")
        return table

    def render(self, report: CatalogReport) -> str:
        with self.console.capture() as capture:
            self.console.print(self.build_table(report))
        return capture.get()

    def generate(self, report: CatalogReport, output_path: str = None) -> str:
        """Print to the terminal; with a path, write the plain-text rendering instead."""
        if output_path is not None:
            return super().generate(report, output_path)
        self.console.print(self.build_table(report))
        return "Console report generated"

    def get_format(self) -> str:
        """Get report format."""
        return "console"
