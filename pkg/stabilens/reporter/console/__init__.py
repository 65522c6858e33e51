"""
Console reporter module.
"""

from .reporter import ConsoleReporter

__all__ = ['ConsoleReporter']
