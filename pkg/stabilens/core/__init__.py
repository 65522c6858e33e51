"""
Core module for StabiLens.
"""

from .config import StabiLensConfig, config
from .types import (
    DistanceMethod, DistanceReport, EadicForm, Partition, KmaxCase, KmaxResult,
    QuantumParams, Rule, TheoremInputs, DerivationRecord, EntrySource,
    CatalogEntry, Verdict, ComparisonVerdict, CatalogReport,
    EntryList, RecordList
)

__all__ = [
    'StabiLensConfig', 'config',
    'DistanceMethod', 'DistanceReport', 'EadicForm', 'Partition', 'KmaxCase', 'KmaxResult',
    'QuantumParams', 'Rule', 'TheoremInputs', 'DerivationRecord', 'EntrySource',
    'CatalogEntry', 'Verdict', 'ComparisonVerdict', 'CatalogReport',
    'EntryList', 'RecordList'
]
