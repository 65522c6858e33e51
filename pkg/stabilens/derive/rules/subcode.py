"""
Subcode construction: [[N, K, >=D]]_q implies [[N, K-1, >=D]]_q for K >= 1.
"""

from ...core.errors import DimensionUnderflow
from ...core.types import QuantumParams, Rule
from ..base import BasePropagationRule

class SubcodeRule(BasePropagationRule):
    rule = Rule.SUBCODE
    marker = 'S'

    def apply_params(self, params: QuantumParams) -> QuantumParams:
        if params.K < 1:
            raise DimensionUnderflow(params.K)
        return QuantumParams(q=params.q, N=params.N, K=params.K - 1, D=params.D)

    def is_applicable(self, params: QuantumParams) -> bool:
        return params.K >= 1
