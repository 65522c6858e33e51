"""
Hermitian inner product, Hermitian duals and self-orthogonality.
"""

from typing import Sequence

from ..core.errors import FieldMismatch, LengthMismatch, NoConjugation
from ..gf.field import FieldElement, FieldSpec
from .linear_code import LinearCode, null_space


def hermitian_inner_int(field: FieldSpec, x: Sequence[int], y: Sequence[int]) -> int:
    """sum_i x_i * y_i^E on integer encodings."""
    total = 0
    for xi, yi in zip(x, y):
        if xi and yi:
            total = field.add_int(total, field.mul_int(xi, field.conj_int(yi)))
    return total


def hermitian_inner(x: Sequence[FieldElement], y: Sequence[FieldElement]) -> FieldElement:
    if len(x) != len(y):
        raise LengthMismatch(len(x), len(y))
    if not x:
        raise ValueError("vectors must be non-empty")
    field = x[0].field
    for v in list(x) + list(y):
        if v.field is not field and v.field != field:
            raise FieldMismatch(field, v.field)
    if not field.has_conjugation:
        raise NoConjugation(field)
    value = hermitian_inner_int(field, [v.value for v in x], [v.value for v in y])
    return field.element(value)


def is_hermitian_self_orthogonal(code: LinearCode) -> bool:
    """True iff g_i ._h g_j = 0 for all generator rows (so C is inside its Hermitian dual)."""
    field = code.field
    if not field.has_conjugation:
        raise NoConjugation(field)
    # g_j ._h g_i is the conjugate of g_i ._h g_j, so i <= j covers every pair
    for i, gi in enumerate(code.rows):
        for gj in code.rows[i:]:
            if hermitian_inner_int(field, gi, gj):
                return False
    return True


def conjugate(code: LinearCode) -> LinearCode:
    """Entrywise conjugate G^(conj) of the generator matrix."""
    field = code.field
    if not field.has_conjugation:
        raise NoConjugation(field)
    rows = tuple(tuple(field.conj_int(x) for x in r) for r in code.rows)
    return LinearCode(field=field, n=code.n, rows=rows)


def hermitian_dual(code: LinearCode) -> LinearCode:
    """Generator of C^{perp_h} = {x : G^(conj) x = 0}; has dimension n - k."""
    field = code.field
    if not field.has_conjugation:
        raise NoConjugation(field)
    basis = null_space(field, conjugate(code).rows, code.n)
    return LinearCode(field=field, n=code.n, rows=tuple(tuple(v) for v in basis))
