"""
Brute-force check of K_n that shares no code with the case formula.

For each candidate minimum part size m, a dynamic programme records which
sums are reachable with exactly t parts drawn from [m, e]. The oracle value is
floor(M/2) for the largest m whose table reaches n with at most e parts.
"""

from functools import lru_cache
from typing import FrozenSet, Tuple

from ..core.errors import NOutOfRange, TooLarge

ORACLE_MAX_E = 32


@lru_cache(maxsize=None)
def _reachable(e: int, low: int) -> Tuple[FrozenSet[int], ...]:
    """reach[t] = sums of exactly t parts, each in [low, e], for t = 0..e."""
    reach = [frozenset({0})]
    for _ in range(e):
        previous = reach[-1]
        reach.append(frozenset(s + part for s in previous for part in range(low, e + 1)))
    return tuple(reach)


def best_min_part(e: int, n: int) -> int:
    """Largest achievable minimum part over admissible partitions; 0 if none."""
    for low in range(e, 1, -1):
        reach = _reachable(e, low)
        if any(n in reach[t] for t in range(1, e + 1)):
            return low
    return 0


def kmax_bruteforce_oracle(e: int, n: int) -> int:
    if e > ORACLE_MAX_E:
        raise TooLarge(e, ORACLE_MAX_E, hint="the oracle is limited to e <= 32")
    if not 2 <= n <= e * e:
        raise NOutOfRange(e, n)
    return best_min_part(e, n) // 2
