"""
CSV reporter module.
"""

from .reporter import CSVReporter

__all__ = ['CSVReporter']
