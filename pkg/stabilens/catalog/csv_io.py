"""
CSV input for catalogs, seed lists and comparison baselines.
"""

import csv
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from ..core.errors import MalformedCSV, StabiLensError
from ..core.types import CatalogEntry, DerivationRecord, EntryList, EntrySource, QuantumParams, RecordList
from ..derive.chain import replay_chain
from ..derive.theorems import record_from_params

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / 'data'

CATALOG_FIELDS = ['q', 'N', 'K', 'D', 'rule', 'chain']
BASELINE_FIELDS = ['q', 'N', 'K', 'D', 'citation']
PARAM_FIELDS = ('q', 'N', 'K', 'D')

PathLike = Union[str, Path]


def data_path(name: str) -> Path:
    return DATA_DIR / name


def sort_entries(entries: Iterable[CatalogEntry]) -> EntryList:
    """N descending, then K descending, then D ascending."""
    return sorted(entries, key=lambda e: (-e.N, -e.K, e.D, e.q))


def _read_rows(path: PathLike, required: Sequence[str]) -> List[Tuple[int, Dict[str, str]]]:
    """Rows with their 1-based file line numbers; an empty file has no rows."""
    with open(path, newline='', encoding='utf-8') as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None:
            return []
        missing = [name for name in required if name not in reader.fieldnames]
        if missing:
            raise MalformedCSV(str(path), 1, f"missing column(s): {', '.join(missing)}")
        rows = []
        for row in reader:
            if None in row or any(row.get(name) is None for name in required):
                raise MalformedCSV(str(path), reader.line_num, "wrong number of fields")
            rows.append((reader.line_num, row))
        return rows


def _params(path: PathLike, line: int, row: Dict[str, str]) -> QuantumParams:
    try:
        q, N, K, D = (int(row[name]) for name in PARAM_FIELDS)
    except ValueError:
        raise MalformedCSV(str(path), line, "q, N, K and D must be integers")
    try:
        return QuantumParams(q=q, N=N, K=K, D=D)
    except ValueError as e:
        raise MalformedCSV(str(path), line, str(e))


def read_baseline(path: PathLike) -> EntryList:
    entries = []
    for line, row in _read_rows(path, BASELINE_FIELDS):
        entries.append(CatalogEntry(
            params=_params(path, line, row),
            source=EntrySource.BASELINE,
            provenance=row['citation'].strip(),
        ))
    logger.debug("read %d baseline rows from %s", len(entries), path)
    return entries


def _record(path: PathLike, line: int, row: Dict[str, str]) -> DerivationRecord:
    params = _params(path, line, row)
    chain = (row.get('chain') or '').strip()
    try:
        record = replay_chain(chain) if chain else record_from_params(params)
    except (StabiLensError, ValueError) as e:
        raise MalformedCSV(str(path), line, str(e))
    if record.params.key != params.key:
        raise MalformedCSV(str(path), line, f"chain yields {record.params}, row claims {params}")
    return record


def read_seeds(path: PathLike) -> RecordList:
    """
    Seed records. A row with a chain is replayed; a bare q,N,K,D row is read
    as [[mn, mn - 2mk, >= k+1]]_q with k = D - 1.
    """
    return [_record(path, line, row) for line, row in _read_rows(path, PARAM_FIELDS)]


def read_catalog(path: PathLike) -> EntryList:
    entries = []
    for line, row in _read_rows(path, PARAM_FIELDS):
        if (row.get('chain') or '').strip():
            provenance: Union[DerivationRecord, str] = _record(path, line, row)
            params = provenance.params
        else:
            params = _params(path, line, row)
            provenance = (row.get('rule') or '').strip()
        entries.append(CatalogEntry(
            params=params,
            source=EntrySource.THIS_WORK,
            provenance=provenance,
            marker=(row.get('rule') or '').strip() or None,
        ))
    return entries
