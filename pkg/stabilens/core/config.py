"""
Core configuration and settings for StabiLens.
"""

from typing import Dict, Any
from dataclasses import dataclass

@dataclass
class FieldConfig:
    """Configuration for finite-field construction."""
    max_order: int = 2 ** 32
    table_limit: int = 2 ** 16

@dataclass
class EnumerationConfig:
    """Guards for exhaustive distance computations."""
    max_enum: int = 10 ** 7
    chunk_size: int = 2 ** 16

@dataclass
class ConstructorConfig:
    """Configuration for the Hermitian self-orthogonal witness search."""
    point_sets: int = 200
    solution_samples: int = 10 ** 5
    point_strategy: str = 'cosets'
    max_order: int = 2 ** 16
    k1_max_order: int = 2 ** 12

    def __post_init__(self):
        if self.point_strategy not in ('cosets', 'uniform'):
            raise ValueError(f"unknown point strategy: {self.point_strategy}")

@dataclass
class ClosureConfig:
    """Configuration for propagation-rule closures."""
    frontier_limit: int = 10 ** 6
    max_steps: int = 64

@dataclass
class ReporterConfig:
    """Configuration for report generation."""
    default_format: str = 'csv'
    max_console_rows: int = 40

class StabiLensConfig:
    """Main configuration class."""
    def __init__(self):
        self.field = FieldConfig()
        self.enumeration = EnumerationConfig()
        self.constructor = ConstructorConfig()
        self.closure = ClosureConfig()
        self.reporter = ReporterConfig()

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'StabiLensConfig':
        """Create config from dictionary."""
        config = cls()
        if 'field' in config_dict:
            config.field = FieldConfig(**config_dict['field'])
        if 'enumeration' in config_dict:
            config.enumeration = EnumerationConfig(**config_dict['enumeration'])
        if 'constructor' in config_dict:
            config.constructor = ConstructorConfig(**config_dict['constructor'])
        if 'closure' in config_dict:
            config.closure = ClosureConfig(**config_dict['closure'])
        if 'reporter' in config_dict:
            config.reporter = ReporterConfig(**config_dict['reporter'])
        return config

# Global configuration instance
config = StabiLensConfig()
