"""
Catalog generation and comparison for StabiLens.
"""

from .recipes import RECIPES, FamilyRecipe, RecordRecipe, get_recipe
from .tables import family, generate_table, records_report, table_names
from .compare import compare, compare_entry, improvements, summarize
from .csv_io import (
    CATALOG_FIELDS, BASELINE_FIELDS, data_path, read_baseline, read_catalog, read_seeds, sort_entries
)

__all__ = [
    'RECIPES',
    'FamilyRecipe',
    'RecordRecipe',
    'get_recipe',
    'family',
    'generate_table',
    'records_report',
    'table_names',
    'compare',
    'compare_entry',
    'improvements',
    'summarize',
    'CATALOG_FIELDS',
    'BASELINE_FIELDS',
    'data_path',
    'read_baseline',
    'read_catalog',
    'read_seeds',
    'sort_entries'
]
