"""
Reporter module for StabiLens.
Provides the report formats for catalogs.
"""

from .base import BaseReporter
from .console import ConsoleReporter
from .csv import CSVReporter
from .json import JSONReporter
from .markdown import MarkdownReporter

REPORTERS = {
    'csv': CSVReporter,
    'json': JSONReporter,
    'console': ConsoleReporter,
    'markdown': MarkdownReporter
}


def get_reporter(fmt: str, config=None) -> BaseReporter:
    if fmt not in REPORTERS:
        raise ValueError(f"unknown report format '{fmt}'; choose one of {', '.join(REPORTERS)}")
    return REPORTERS[fmt](config)


__all__ = [
    'BaseReporter',
    'ConsoleReporter',
    'CSVReporter',
    'JSONReporter',
    'MarkdownReporter',
    'REPORTERS',
    'get_reporter'
]
