"""
Closure engine: everything reachable from seed records by the propagation rules.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..core.config import config as default_config
from ..core.errors import BudgetExceeded
from ..core.types import DerivationRecord, QuantumParams, RecordList
from .rules.lengthening import LengtheningRule
from .rules.subcode import SubcodeRule

logger = logging.getLogger(__name__)

SEED_MARKER = '*'
AMBIGUOUS_MARKER = 'L|S (ambiguous)'

# (seed index, lengthen steps, subcode steps)
Signature = Tuple[int, int, int]
Params = Tuple[int, int, int, int]


@dataclass
class ClosureResult:
    """
    Records reachable from the seeds, each carrying its shortest chain.

    ``signatures`` keeps, per parameter key, every (seed, #lengthen, #subcode)
    combination that reaches it in the minimal number of steps. Rules commute,
    so a signature stands for all orderings of the same steps.
    """
    records: RecordList = field(default_factory=list)
    signatures: Dict[Params, FrozenSet[Signature]] = field(default_factory=dict)

    def get(self, params: QuantumParams) -> Optional[DerivationRecord]:
        for record in self.records:
            if record.params.key == params.key:
                return record
        return None

    def marker(self, params: QuantumParams) -> str:
        """'*' for seeds, 'L' for pure lengthening, 'S' once a subcode step is needed."""
        sigs = self.signatures[params.key]
        if any(l == 0 and s == 0 for _, l, s in sigs):
            return SEED_MARKER
        markers = {'L' if s == 0 else 'S' for _, _, s in sigs}
        if len(markers) > 1:
            return AMBIGUOUS_MARKER
        return markers.pop()


class ClosureEngine:
    """Breadth-first closure under lengthening and subcode construction."""

    def __init__(self, config=None):
        self.config = config or default_config
        # Order matters: ties between equal-length chains go to the earlier rule.
        self.rules = [LengtheningRule(self.config), SubcodeRule(self.config)]

    def _admissible(self, params: QuantumParams, n_max: int, k_min: int) -> bool:
        return params.N <= n_max and params.K >= k_min

    def run(self, seeds: Iterable[DerivationRecord], n_max: int, k_min: int,
            max_steps: Optional[int] = None) -> ClosureResult:
        if max_steps is None:
            max_steps = self.config.closure.max_steps
        frontier_limit = self.config.closure.frontier_limit

        best: Dict[Params, DerivationRecord] = {}
        signatures: Dict[Params, Set[Signature]] = {}
        order: Dict[Params, Tuple[int, ...]] = {}

        frontier: List[Params] = []
        for index, seed in enumerate(seeds):
            key = seed.params.key
            if not self._admissible(seed.params, n_max, k_min):
                logger.warning("seed %s lies outside N <= %d, K >= %d; skipped", seed.params, n_max, k_min)
                continue
            if key in best:
                logger.warning("seed %d repeats %s; keeping the chain of seed %d", index, seed.params, order[key][0])
                signatures[key].add((index, 0, 0))
                continue
            best[key] = seed
            signatures[key] = {(index, 0, 0)}
            order[key] = (index,)
            frontier.append(key)

        for step in range(1, max_steps + 1):
            if not frontier:
                break
            reached: Dict[Params, DerivationRecord] = {}
            for parent_key in sorted(frontier, key=lambda k: order[k]):
                parent = best[parent_key]
                for rank, rule in enumerate(self.rules):
                    if not rule.is_applicable(parent.params):
                        continue
                    child = rule.apply(parent)
                    key = child.params.key
                    if key in best or not self._admissible(child.params, n_max, k_min):
                        continue
                    child_order = order[parent_key] + (rank,)
                    if key not in reached or child_order < order[key]:
                        reached[key] = child
                        order[key] = child_order
                    bumped = {
                        (seed, l + (rank == 0), s + (rank == 1))
                        for seed, l, s in signatures[parent_key]
                    }
                    signatures.setdefault(key, set()).update(bumped)
            if len(reached) > frontier_limit:
                raise BudgetExceeded(len(reached), frontier_limit)
            best.update(reached)
            frontier = list(reached)
            logger.debug("closure step %d: %d new records", step, len(reached))

        records = sorted(best.values(), key=lambda r: (-r.params.N, -r.params.K, r.params.D))
        logger.info("closure reached %d parameter sets", len(records))
        return ClosureResult(
            records=records,
            signatures={key: frozenset(sigs) for key, sigs in signatures.items()}
        )


def closure(seeds: Iterable[DerivationRecord], n_max: int, k_min: int,
            max_steps: Optional[int] = None, config=None) -> RecordList:
    """All records reachable from ``seeds`` with N <= n_max and K >= k_min."""
    return ClosureEngine(config).run(seeds, n_max, k_min, max_steps).records
