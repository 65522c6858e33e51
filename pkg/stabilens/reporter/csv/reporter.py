"""
CSV reporter for StabiLens.
"""

import csv
import io
from typing import Iterable, List
from ...catalog.csv_io import CATALOG_FIELDS
from ...core.types import CatalogReport, ComparisonVerdict
from ..base import BaseReporter
from ..common import RecordConverter

VERDICT_FIELDS = ['q', 'N', 'ours_K', 'ours_D', 'theirs_K', 'theirs_D', 'verdict', 'citation']

class CSVReporter(BaseReporter):
    """CSV report with the fixed schema q,N,K,D,rule,chain."""

    def _write(self, fieldnames: List[str], rows: Iterable[dict]) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        return buffer.getvalue()

    def render(self, report: CatalogReport) -> str:
        return self._write(CATALOG_FIELDS, (RecordConverter.entry_to_row(e) for e in report.entries))

    def render_verdicts(self, verdicts: Iterable[ComparisonVerdict]) -> str:
        return self._write(VERDICT_FIELDS, (RecordConverter.verdict_to_row(v) for v in verdicts))

    def get_format(self) -> str:
        """Get report format."""
        return "csv"
