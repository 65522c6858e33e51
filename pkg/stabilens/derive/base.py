"""
Base propagation-rule interface for StabiLens.
"""

from abc import ABC, abstractmethod
from ..core.types import DerivationRecord, QuantumParams, Rule

class BasePropagationRule(ABC):
    """A rule mapping existing stabilizer parameters to new ones."""

    rule: Rule
    marker: str

    def __init__(self, config=None):
        self.config = config

    @abstractmethod
    def apply_params(self, params: QuantumParams) -> QuantumParams:
        """New parameters implied by ``params``."""
        pass

    def apply(self, record: DerivationRecord) -> DerivationRecord:
        return DerivationRecord(params=self.apply_params(record.params), rule=self.rule, parent=record)

    def is_applicable(self, params: QuantumParams) -> bool:
        return True
