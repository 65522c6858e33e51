"""
Linear codes, Hermitian duality and distance checks.
"""

from .linear_code import LinearCode, row_reduce, rank, null_space
from .hermitian import (
    hermitian_inner, hermitian_inner_int, is_hermitian_self_orthogonal,
    conjugate, hermitian_dual
)
from .distance import min_distance_exhaustive, dual_distance_via_columns

__all__ = [
    'LinearCode', 'row_reduce', 'rank', 'null_space',
    'hermitian_inner', 'hermitian_inner_int', 'is_hermitian_self_orthogonal',
    'conjugate', 'hermitian_dual',
    'min_distance_exhaustive', 'dual_distance_via_columns'
]
