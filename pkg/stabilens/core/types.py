"""
Type definitions for StabiLens.
"""

from enum import Enum
from typing import Dict, List, Any, Optional, Tuple, Union
from dataclasses import dataclass, field

from ..utils import NumberUtils

class DistanceMethod(str, Enum):
    EXHAUSTIVE = 'exhaustive'
    COLUMN_DEPENDENCE = 'column-dependence'

@dataclass(frozen=True)
class DistanceReport:
    """Minimum distance of a code and how it was obtained."""
    value: int
    method: DistanceMethod
    enumerated_count: int

@dataclass(frozen=True)
class EadicForm:
    """n = a*e + b with 0 <= b < e; a = e only for n = e^2."""
    e: int
    n: int
    a: int
    b: int

@dataclass(frozen=True)
class Partition:
    """Multiset of part sizes, kept sorted in descending order."""
    parts: Tuple[int, ...]
    branch: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(sorted(self.parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def min_part(self) -> int:
        return min(self.parts)

class KmaxCase(str, Enum):
    B_ZERO = 'b-zero'
    A_ZERO = 'a-zero'
    OVERFLOW = 'overflow'
    BALANCED = 'balanced'

@dataclass(frozen=True)
class KmaxResult:
    """K_n together with the case that produced it and a witness partition."""
    value: int
    case_tag: KmaxCase
    witness: Partition
    eadic: EadicForm

@dataclass(frozen=True)
class QuantumParams:
    """Parameters [[N, K, >=D]]_q of a stabilizer code; D is a lower bound."""
    q: int
    N: int
    K: int
    D: int
    exact_d: bool = False

    def __post_init__(self):
        if not NumberUtils.is_prime_power(self.q):
            raise ValueError(f"q={self.q} is not a prime power")
        if not 0 <= self.K <= self.N:
            raise ValueError(f"need 0 <= K <= N, got N={self.N}, K={self.K}")
        if self.D < 1:
            raise ValueError(f"need D >= 1, got D={self.D}")

    @property
    def key(self) -> Tuple[int, int, int, int]:
        return (self.q, self.N, self.K, self.D)

    def __str__(self) -> str:
        return f"[[{self.N}, {self.K}, >={self.D}]]_{self.q}"

class Rule(str, Enum):
    BASE_HERMITIAN = 'base-hermitian'
    EXTENSION = 'extension'
    LENGTHEN = 'lengthen'
    SUBCODE = 'subcode'
    BEST_EXTENSION = 'best-extension'

ROOT_RULES = (Rule.BASE_HERMITIAN, Rule.EXTENSION, Rule.BEST_EXTENSION)

@dataclass(frozen=True)
class TheoremInputs:
    """Classical data (q, m, n, k) a root derivation starts from."""
    q: int
    m: int
    n: int
    k: int

@dataclass(frozen=True)
class DerivationRecord:
    """Quantum parameters with the provenance chain that produced them."""
    params: QuantumParams
    rule: Rule
    parent: Optional['DerivationRecord'] = None
    inputs: Optional[TheoremInputs] = None

    @property
    def root(self) -> 'DerivationRecord':
        record = self
        while record.parent is not None:
            record = record.parent
        return record

    @property
    def chain(self) -> List['DerivationRecord']:
        """Records from the root derivation down to this one."""
        steps = []
        record: Optional[DerivationRecord] = self
        while record is not None:
            steps.append(record)
            record = record.parent
        return steps[::-1]

    @property
    def depth(self) -> int:
        return len(self.chain) - 1

    @property
    def rule_path(self) -> Tuple[Rule, ...]:
        """Propagation rules applied after the root, in order."""
        return tuple(step.rule for step in self.chain[1:])

class EntrySource(str, Enum):
    THIS_WORK = 'this-work'
    BASELINE = 'baseline'

@dataclass(frozen=True)
class CatalogEntry:
    """A parameter triple in a catalog, with where it came from."""
    params: QuantumParams
    source: EntrySource
    provenance: Union[DerivationRecord, str]
    marker: Optional[str] = None

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def N(self) -> int:
        return self.params.N

    @property
    def K(self) -> int:
        return self.params.K

    @property
    def D(self) -> int:
        return self.params.D

class Verdict(str, Enum):
    BETTER = 'better'
    EQUAL = 'equal'
    WORSE = 'worse'
    INCOMPARABLE = 'incomparable'

@dataclass(frozen=True)
class ComparisonVerdict:
    """Outcome of comparing one of our entries with a baseline entry."""
    ours: Optional[CatalogEntry]
    theirs: CatalogEntry
    verdict: Verdict

@dataclass
class CatalogReport:
    """Complete catalog output handed to reporters."""
    report_info: Dict[str, Any]
    entries: List[CatalogEntry] = field(default_factory=list)

# Type aliases
EntryList = List[CatalogEntry]
RecordList = List[DerivationRecord]
