"""
Quantum parameter derivations for StabiLens.
"""

from .theorems import derive_base, derive_extended, derive_from_theorem, infer_inputs, record_from_params
from .base import BasePropagationRule
from .rules import LengtheningRule, SubcodeRule, lengthen, subcode
from .engine import ClosureEngine, ClosureResult, closure, SEED_MARKER, AMBIGUOUS_MARKER
from .extension import ExtensionCandidate, best_extension, extension_candidates
from .chain import format_chain, replay_chain, record_to_dict, record_from_dict

__all__ = [
    'derive_base',
    'derive_extended',
    'derive_from_theorem',
    'infer_inputs',
    'record_from_params',
    'BasePropagationRule',
    'LengtheningRule',
    'SubcodeRule',
    'lengthen',
    'subcode',
    'ClosureEngine',
    'ClosureResult',
    'closure',
    'SEED_MARKER',
    'AMBIGUOUS_MARKER',
    'ExtensionCandidate',
    'best_extension',
    'extension_candidates',
    'format_chain',
    'replay_chain',
    'record_to_dict',
    'record_from_dict'
]
