"""
Choosing the extension degree that gives the largest K for a target length.
"""

import logging
from dataclasses import dataclass
from typing import List

from ..core.errors import NoValidExtension
from ..core.types import DerivationRecord, QuantumParams, Rule, TheoremInputs
from ..partition.kmax import kmax
from ..utils import NumberUtils
from .theorems import derive_extended

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionCandidate:
    """One admissible extension degree m' for a target (q, N, d)."""
    m: int
    n: int
    kmax: int
    params: QuantumParams


def extension_candidates(q: int, N: int, d: int) -> List[ExtensionCandidate]:
    """Every m' dividing N with q^m' > 2, 2 <= N/m' <= q^{2m'} and d - 1 <= K_{N/m'}."""
    if not NumberUtils.is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")
    if d < 2:
        raise ValueError(f"target distance must be at least 2, got {d}")
    k = d - 1
    found = []
    for m in NumberUtils.divisors(N):
        e = q ** m
        n = N // m
        if e <= 2 or n < 2 or n > e * e:
            continue
        bound = kmax(e, n).value
        if k > bound:
            continue
        found.append(ExtensionCandidate(m=m, n=n, kmax=bound, params=derive_extended(q, m, n, k, d)))
    return found


def best_extension(q: int, N: int, d: int) -> DerivationRecord:
    """
    The smallest admissible m'. K = N - 2m'(d-1) only shrinks as m' grows, so
    the first candidate dominates the rest.
    """
    candidates = extension_candidates(q, N, d)
    if not candidates:
        raise NoValidExtension(q, N, d)
    best = candidates[0]
    logger.debug("best extension for q=%d, N=%d, d=%d: m'=%d -> %s", q, N, d, best.m, best.params)
    return DerivationRecord(
        params=best.params,
        rule=Rule.BEST_EXTENSION,
        inputs=TheoremInputs(q=q, m=best.m, n=best.n, k=d - 1)
    )
