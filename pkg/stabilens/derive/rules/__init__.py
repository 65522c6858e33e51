"""
Propagation rules for StabiLens.
"""

from ...core.types import DerivationRecord
from .lengthening import LengtheningRule
from .subcode import SubcodeRule

_LENGTHEN = LengtheningRule()
_SUBCODE = SubcodeRule()


def lengthen(record: DerivationRecord) -> DerivationRecord:
    return _LENGTHEN.apply(record)


def subcode(record: DerivationRecord) -> DerivationRecord:
    return _SUBCODE.apply(record)


__all__ = [
    'LengtheningRule',
    'SubcodeRule',
    'lengthen',
    'subcode'
]
