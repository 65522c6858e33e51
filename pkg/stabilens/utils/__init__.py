"""
Utilities module for StabiLens.
"""

import math
from typing import Dict, List, Optional, Tuple


class NumberUtils:
    """Small number-theoretic helpers shared by the field and partition code."""

    @staticmethod
    def is_prime(p: int) -> bool:
        """Deterministic trial-division primality test (desk-scale inputs)."""
        if p < 2:
            return False
        if p % 2 == 0:
            return p == 2
        for d in range(3, math.isqrt(p) + 1, 2):
            if p % d == 0:
                return False
        return True

    @staticmethod
    def factorize(n: int) -> Dict[int, int]:
        """Prime factorisation by trial division."""
        factors: Dict[int, int] = {}
        d = 2
        while d * d <= n:
            while n % d == 0:
                factors[d] = factors.get(d, 0) + 1
                n //= d
            d += 1 if d == 2 else 2
        if n > 1:
            factors[n] = factors.get(n, 0) + 1
        return factors

    @staticmethod
    def prime_power(q: int) -> Optional[Tuple[int, int]]:
        """Return (p, r) with q = p^r, or None when q is not a prime power."""
        if q < 2:
            return None
        factors = NumberUtils.factorize(q)
        if len(factors) != 1:
            return None
        (p, r), = factors.items()
        return p, r

    @staticmethod
    def is_prime_power(q: int) -> bool:
        return NumberUtils.prime_power(q) is not None

    @staticmethod
    def divisors(n: int) -> List[int]:
        """Positive divisors of n in ascending order."""
        small, large = [], []
        for d in range(1, math.isqrt(n) + 1):
            if n % d == 0:
                small.append(d)
                if d != n // d:
                    large.append(n // d)
        return small + large[::-1]


class RangeUtils:
    """Parsing helpers for CLI ranges such as ``1..7`` or ``3,5,8..10``."""

    @staticmethod
    def parse_int_range(text: str) -> List[int]:
        values: List[int] = []
        for chunk in text.split(','):
            chunk = chunk.strip()
            if not chunk:
                continue
            if '..' in chunk:
                low, high = chunk.split('..', 1)
                start, stop = int(low), int(high)
                if stop < start:
                    raise ValueError(f"empty range: {chunk}")
                values.extend(range(start, stop + 1))
            else:
                values.append(int(chunk))
        if not values:
            raise ValueError(f"no values in range '{text}'")
        return values
