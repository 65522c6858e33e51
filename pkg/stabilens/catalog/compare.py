"""
Comparing our catalog against baseline parameters.
"""

import logging
from collections import Counter
from typing import Iterable, List

from ..core.types import CatalogEntry, ComparisonVerdict, Verdict

logger = logging.getLogger(__name__)


def _dominates(ours: CatalogEntry, theirs: CatalogEntry) -> bool:
    if ours.q != theirs.q or ours.N != theirs.N:
        return False
    if ours.D == theirs.D and ours.K > theirs.K:
        return True
    return ours.K == theirs.K and ours.D > theirs.D


def compare_entry(ours: Iterable[CatalogEntry], theirs: CatalogEntry) -> ComparisonVerdict:
    """
    Verdict for one baseline row against every entry of ours sharing (q, N, D)
    or (q, N, K). The strongest of our matching entries decides.
    """
    matched = [
        e for e in ours
        if e.q == theirs.q and e.N == theirs.N and (e.D == theirs.D or e.K == theirs.K)
    ]
    better = [e for e in matched if _dominates(e, theirs)]
    if better:
        best = max(better, key=lambda e: (e.K, e.D))
        return ComparisonVerdict(ours=best, theirs=theirs, verdict=Verdict.BETTER)
    for e in matched:
        if e.params.key == theirs.params.key:
            return ComparisonVerdict(ours=e, theirs=theirs, verdict=Verdict.EQUAL)
    worse = [e for e in matched if _dominates(theirs, e)]
    if worse:
        best = max(worse, key=lambda e: (e.K, e.D))
        return ComparisonVerdict(ours=best, theirs=theirs, verdict=Verdict.WORSE)
    return ComparisonVerdict(ours=None, theirs=theirs, verdict=Verdict.INCOMPARABLE)


def compare(ours: Iterable[CatalogEntry], baseline: Iterable[CatalogEntry]) -> List[ComparisonVerdict]:
    """One verdict per baseline row, in baseline order."""
    ours = list(ours)
    verdicts = [compare_entry(ours, theirs) for theirs in baseline]
    counts = Counter(v.verdict.value for v in verdicts)
    logger.info("comparison: %s", ', '.join(f"{k}={v}" for k, v in sorted(counts.items())))
    return verdicts


def summarize(verdicts: Iterable[ComparisonVerdict]) -> dict:
    counts = Counter(v.verdict.value for v in verdicts)
    return {verdict.value: counts.get(verdict.value, 0) for verdict in Verdict}


def improvements(verdicts: Iterable[ComparisonVerdict]) -> List[ComparisonVerdict]:
    return [v for v in verdicts if v.verdict is Verdict.BETTER]

