"""
Base constructor interface for StabiLens.
"""

from abc import ABC, abstractmethod
from typing import List, Optional

from ..codes.linear_code import LinearCode
from ..core.config import config as default_config
from ..gf.field import FieldSpec
from .certificate import Certificate, run_checks

class BaseConstructor(ABC):
    """Base class for witness-code constructors."""

    def __init__(self, config=None):
        self.config = config or default_config

    @abstractmethod
    def construct(self, q: int, m: int, n: int, k: int, rng_seed: int = 0) -> Certificate:
        """Build and certify an [n, k]_{q^{2m}} Hermitian self-orthogonal code."""
        pass

    def certify(self, field: FieldSpec, code: LinearCode, rng_seed: Optional[int] = None,
                points: Optional[List[int]] = None,
                multipliers: Optional[List[int]] = None) -> Optional[Certificate]:
        """Certificate for ``code`` when it has dual distance k + 1, else None."""
        checks = run_checks(code, self.config.enumeration.max_enum)
        target = code.k + 1
        if not checks['self_orthogonal'] or checks['dual_dim'] != code.n - code.k or checks['dual_distance'] != target:
            return None
        return Certificate(
            field=field,
            code=code,
            claimed={'n': code.n, 'k': code.k, 'dual_distance': target},
            checks=checks,
            rng_seed=rng_seed,
            points=points,
            multipliers=multipliers,
        )
