"""
Lookup tables and vectorised arithmetic for small fields.

Elements are handled by their integer encodings sum(c_i * p^i). Fields up to
``config.field.table_limit`` elements get log/exp tables, which make scalar
multiplication O(1) and let numpy process whole batches of codewords.
"""

import logging
from typing import TYPE_CHECKING

import numpy as np

from ..utils import NumberUtils

if TYPE_CHECKING:
    from .field import FieldSpec

logger = logging.getLogger(__name__)


class FieldTables:
    """Log/exp tables plus digit expansions for one FieldSpec."""

    def __init__(self, field: 'FieldSpec'):
        self.p = field.p
        self.s = field.s
        self.order = field.order
        self.generator = self._find_generator(field)

        exp = [0] * (2 * (self.order - 1))
        log = [0] * self.order
        value = 1
        for i in range(self.order - 1):
            exp[i] = value
            log[value] = i
            value = field._mul_poly(value, self.generator)
        for i in range(self.order - 1, 2 * (self.order - 1)):
            exp[i] = exp[i - (self.order - 1)]
        self.exp = exp
        self.log = log

        self.exp_array = np.array(exp, dtype=np.int64)
        self.log_array = np.array(log, dtype=np.int64)
        self.powers = np.array([self.p ** i for i in range(self.s)], dtype=np.int64)
        values = np.arange(self.order, dtype=np.int64)
        self.digits = (values[:, None] // self.powers[None, :]) % self.p
        logger.debug("built tables for F_%d^%d (generator %d)", self.p, self.s, self.generator)

    @staticmethod
    def _find_generator(field: 'FieldSpec') -> int:
        """Smallest encoding whose multiplicative order is order - 1."""
        group = field.order - 1
        if group == 1:
            return 1
        cofactors = [group // ell for ell in NumberUtils.factorize(group)]
        for candidate in range(2, field.order):
            if all(field._pow_poly(candidate, c) != 1 for c in cofactors):
                return candidate
        raise RuntimeError(f"no primitive element found in F_{field.order}")

    # --- vectorised operations on int64 arrays of encodings ------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.s == 1:
            return (a + b) % self.p
        summed = (self.digits[a] + self.digits[b]) % self.p
        return summed @ self.powers

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        zero = (a == 0) | (b == 0)
        prod = self.exp_array[self.log_array[a] + self.log_array[b]]
        return np.where(zero, 0, prod)
