"""
JSON reporter module.
"""

from .reporter import JSONReporter

__all__ = ['JSONReporter']
