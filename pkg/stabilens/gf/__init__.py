"""
Finite-field arithmetic for StabiLens.
"""

from .field import (
    FieldSpec, FieldElement, make_field, field_for,
    add, sub, mul, inv, power, conj, norm_preimage
)
from .kernel import FieldTables

__all__ = [
    'FieldSpec', 'FieldElement', 'FieldTables', 'make_field', 'field_for',
    'add', 'sub', 'mul', 'inv', 'power', 'conj', 'norm_preimage'
]
