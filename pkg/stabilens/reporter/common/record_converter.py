"""
Common conversions from catalog entries to rows and dictionaries.
"""

from typing import Any, Dict, Optional
from ...core.types import CatalogEntry, ComparisonVerdict, DerivationRecord
from ...derive.chain import format_chain, record_to_dict

class RecordConverter:
    """Row and dict views of entries shared by all reporters."""

    @staticmethod
    def record_of(entry: CatalogEntry) -> Optional[DerivationRecord]:
        return entry.provenance if isinstance(entry.provenance, DerivationRecord) else None

    @staticmethod
    def rule_label(entry: CatalogEntry) -> str:
        """Table marker when present, else the last rule applied, else the citation."""
        if entry.marker:
            return entry.marker
        record = RecordConverter.record_of(entry)
        if record is not None:
            return record.rule.value
        return str(entry.provenance)

    @staticmethod
    def entry_to_row(entry: CatalogEntry) -> Dict[str, Any]:
        record = RecordConverter.record_of(entry)
        return {
            'q': entry.q,
            'N': entry.N,
            'K': entry.K,
            'D': entry.D,
            'rule': RecordConverter.rule_label(entry),
            'chain': format_chain(record) if record is not None else '',
        }

    @staticmethod
    def entry_to_dict(entry: CatalogEntry) -> Dict[str, Any]:
        record = RecordConverter.record_of(entry)
        if record is not None:
            data = record_to_dict(record)
        else:
            data = {'q': entry.q, 'N': entry.N, 'K': entry.K, 'D': entry.D, 'citation': entry.provenance}
        data['source'] = entry.source.value
        if entry.marker:
            data['marker'] = entry.marker
        return data

    @staticmethod
    def verdict_to_row(verdict: ComparisonVerdict) -> Dict[str, Any]:
        ours = verdict.ours
        theirs = verdict.theirs
        return {
            'q': theirs.q,
            'N': theirs.N,
            'ours_K': ours.K if ours else '',
            'ours_D': ours.D if ours else '',
            'theirs_K': theirs.K,
            'theirs_D': theirs.D,
            'verdict': verdict.verdict.value,
            'citation': theirs.provenance if isinstance(theirs.provenance, str) else '',
        }
