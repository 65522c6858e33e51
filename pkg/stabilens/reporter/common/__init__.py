"""
Common utilities for reporters.
"""

from .record_converter import RecordConverter

__all__ = ['RecordConverter']
