"""
Minimum distance computations at desk scale.
"""

import logging
from itertools import combinations, product
from math import comb
from typing import Optional

import numpy as np

from ..core.config import config
from ..core.errors import TooLarge
from ..core.types import DistanceMethod, DistanceReport
from .linear_code import LinearCode, rank

logger = logging.getLogger(__name__)


def _weight(word) -> int:
    return sum(1 for x in word if x)


def min_distance_exhaustive(code: LinearCode, max_enum: Optional[int] = None) -> DistanceReport:
    """
    Minimum weight over all nonzero codewords.

    Only messages whose first nonzero symbol is 1 are enumerated: scalar
    multiples share their weight, so this covers every nonzero codeword.
    Batches are evaluated with numpy when the field has lookup tables.
    """
    limit = config.enumeration.max_enum if max_enum is None else max_enum
    field, k, n = code.field, code.k, code.n
    if k == 0:
        raise ValueError("a zero-dimensional code has no nonzero codeword")
    size = field.order ** k
    if size > limit:
        raise TooLarge(size, limit, hint="use dual_distance_via_columns instead")

    best = n + 1
    enumerated = 0
    tables = field.tables
    G = np.array(code.rows, dtype=np.int64)
    for lead in range(k):
        free = k - 1 - lead
        total = field.order ** free
        if tables is None:
            for tail in product(range(field.order), repeat=free):
                word = list(code.rows[lead])
                for coef, row in zip(tail, code.rows[lead + 1:]):
                    if coef:
                        word = [field.add_int(w, field.mul_int(coef, g)) for w, g in zip(word, row)]
                best = min(best, _weight(word))
                enumerated += 1
            continue
        chunk = config.enumeration.chunk_size
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            words = np.broadcast_to(G[lead], (len(idx), n)).copy()
            for j in range(free):
                coef = (idx // field.order ** j) % field.order
                row = G[lead + 1 + j]
                words = tables.vadd(words, tables.vmul(coef[:, None], row[None, :]))
            best = min(best, int(np.count_nonzero(words, axis=1).min()))
            enumerated += len(idx)
    logger.debug("exhaustive distance of [%d,%d]_%d: %d (%d words)", n, k, field.order, best, enumerated)
    return DistanceReport(value=best, method=DistanceMethod.EXHAUSTIVE, enumerated_count=enumerated)


def dual_distance_via_columns(code: LinearCode, max_enum: Optional[int] = None) -> DistanceReport:
    """
    Minimum distance of C^{perp_h} as the smallest number of linearly dependent
    columns of G.

    G^(conj) is a parity-check matrix of C^{perp_h}; conjugation is a field
    automorphism, so it does not change which column sets are dependent.
    """
    limit = config.enumeration.max_enum if max_enum is None else max_enum
    field, k, n = code.field, code.k, code.n
    if k >= n:
        raise ValueError("the Hermitian dual of the full space is zero; no distance to report")
    top = min(k + 1, n)
    size = sum(comb(n, w) for w in range(1, top + 1))
    if size > limit:
        raise TooLarge(size, limit)

    columns = [code.column(i) for i in range(n)]
    checked = 0
    for w in range(1, top + 1):
        for subset in combinations(range(n), w):
            checked += 1
            if rank(field, [columns[i] for i in subset]) < w:
                return DistanceReport(value=w, method=DistanceMethod.COLUMN_DEPENDENCE,
                                      enumerated_count=checked)
    # any k + 1 vectors in F^k are dependent, so the loop always returns
    raise AssertionError("no dependent column set found")
