"""
JSON reporter for StabiLens.
"""

import json
from typing import Dict, Any
from ... import __version__
from ...core.types import CatalogReport
from ..base import BaseReporter
from ..common import RecordConverter

class JSONReporter(BaseReporter):
    """JSON-based report generator."""

    def render(self, report: CatalogReport) -> str:
        return json.dumps(self._report_to_dict(report), indent=2, ensure_ascii=False) + '\n'

    def _report_to_dict(self, report: CatalogReport) -> Dict[str, Any]:
        return {
            "project": {
                "name": "StabiLens",
                "description": "Stabilizer code parameters from Hermitian self-orthogonal codes",
                "version": __version__
            },
            "report_info": report.report_info,
            "entries": [RecordConverter.entry_to_dict(e) for e in report.entries]
        }

    def get_format(self) -> str:
        """Get report format."""
        return "json"
