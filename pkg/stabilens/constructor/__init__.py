"""
Witness-code construction for StabiLens.
"""

from .base import BaseConstructor
from .certificate import Certificate, failed_checks, run_checks, verify
from .search import EvaluationCodeConstructor, construct
from .exhaustive import ExhaustiveK1Constructor, exhaustive_construct_k1

__all__ = [
    'BaseConstructor',
    'Certificate',
    'failed_checks',
    'run_checks',
    'verify',
    'EvaluationCodeConstructor',
    'construct',
    'ExhaustiveK1Constructor',
    'exhaustive_construct_k1'
]
