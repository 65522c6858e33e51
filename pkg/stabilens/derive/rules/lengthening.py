"""
Lengthening: [[N, K, >=D]]_q implies [[N+1, K, >=D]]_q.
"""

from ...core.types import QuantumParams, Rule
from ..base import BasePropagationRule

class LengtheningRule(BasePropagationRule):
    rule = Rule.LENGTHEN
    marker = 'L'

    def apply_params(self, params: QuantumParams) -> QuantumParams:
        return QuantumParams(q=params.q, N=params.N + 1, K=params.K, D=params.D)
