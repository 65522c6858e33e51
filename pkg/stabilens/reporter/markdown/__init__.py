"""
Markdown reporter module.
"""

from .reporter import MarkdownReporter

__all__ = ['MarkdownReporter']
