"""
Partition witnesses and the K_n bound.
"""

from .kmax import PartitionCheck, eadic, classify, kmax, partition_witness, validate_partition
from .oracle import kmax_bruteforce_oracle, best_min_part

__all__ = [
    'PartitionCheck', 'eadic', 'classify', 'kmax', 'partition_witness', 'validate_partition',
    'kmax_bruteforce_oracle', 'best_min_part'
]
