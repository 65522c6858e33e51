"""
Linear codes over a FieldSpec and the row reduction they are built on.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Sequence, Tuple, Union

from ..core.errors import RankDeficient
from ..gf.field import FieldElement, FieldSpec

Row = Tuple[int, ...]
Entry = Union[int, FieldElement]


def row_reduce(field: FieldSpec, rows: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
    """
    Reduced row echelon form over ``field``.

    Pivoting is deterministic: columns left to right, and in each column the
    first row at or below the current position with a nonzero entry. Zero rows
    are dropped. Returns (echelon rows, pivot columns).
    """
    matrix = [list(r) for r in rows]
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots: List[int] = []
    top = 0
    for col in range(ncols):
        if top == len(matrix):
            break
        pivot_row = next((r for r in range(top, len(matrix)) if matrix[r][col]), None)
        if pivot_row is None:
            continue
        matrix[top], matrix[pivot_row] = matrix[pivot_row], matrix[top]
        inv = field.inv_int(matrix[top][col])
        matrix[top] = [field.mul_int(inv, x) for x in matrix[top]]
        for r in range(len(matrix)):
            factor = matrix[r][col]
            if r != top and factor:
                neg = field.neg_int(factor)
                matrix[r] = [field.add_int(x, field.mul_int(neg, y)) for x, y in zip(matrix[r], matrix[top])]
        pivots.append(col)
        top += 1
    return matrix[:top], pivots


def rank(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    return len(row_reduce(field, rows)[1])


def null_space(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> List[List[int]]:
    """Basis of {x : rows . x = 0}, one vector per free column, in column order."""
    echelon, pivots = row_reduce(field, rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row, pcol in zip(echelon, pivots):
            vec[pcol] = field.neg_int(row[free])
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix."""
    field: FieldSpec
    n: int
    rows: Tuple[Row, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, 'rows', rows)
        if self.n < 1:
            raise ValueError(f"code length must be positive, got {self.n}")
        for r in rows:
            if len(r) != self.n:
                raise ValueError(f"row of length {len(r)} in a length-{self.n} code")
            if any(not 0 <= x < self.field.order for x in r):
                raise ValueError("generator entry outside the field")
        if len(rows) > self.n:
            raise RankDeficient(len(rows), self.n)
        found = len(self.echelon)
        if found != len(rows):
            raise RankDeficient(len(rows), found)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Entry]], n: int = None) -> 'LinearCode':
        """Build from rows of FieldElements or integer encodings."""
        converted = [tuple(int(field.element(x).value) if isinstance(x, FieldElement) else int(x) for x in r)
                     for r in rows]
        if n is None:
            if not converted:
                raise ValueError("length n is required for an empty generator")
            n = len(converted[0])
        return cls(field=field, n=n, rows=tuple(converted))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def G(self) -> List[List[FieldElement]]:
        return [[self.field.element(x) for x in r] for r in self.rows]

    @cached_property
    def echelon(self) -> Tuple[Row, ...]:
        return tuple(tuple(r) for r in row_reduce(self.field, self.rows)[0])

    def same_row_space(self, other: 'LinearCode') -> bool:
        return self.field == other.field and self.n == other.n and self.echelon == other.echelon

    def column(self, index: int) -> Row:
        return tuple(r[index] for r in self.rows)

    def contains(self, word: Sequence[int]) -> bool:
        return rank(self.field, list(self.rows) + [list(word)]) == self.k

    def to_dict(self) -> Dict[str, Any]:
        return {
            'field': self.field.to_dict(),
            'n': self.n,
            'k': self.k,
            'generator': [list(r) for r in self.rows],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LinearCode':
        field = FieldSpec.from_dict(data['field'])
        code = cls(field=field, n=int(data['n']), rows=tuple(tuple(r) for r in data['generator']))
        if 'k' in data and int(data['k']) != code.k:
            raise ValueError(f"header says k={data['k']} but generator has {code.k} rows")
        return code
