"""
Table recipes: every catalog table is described by theorem inputs and rules,
never by its resulting parameters.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from ..core.types import TheoremInputs

@dataclass(frozen=True)
class FamilyRecipe:
    """[[mn, mn - 2mk, >= k+1]]_q for k in a range, optionally lengthened."""
    name: str
    caption: str
    q: int
    m: int
    n: int
    k_range: Tuple[int, int]
    skip: Tuple[int, ...] = ()
    lengthen: int = 0

    @property
    def ks(self) -> Tuple[int, ...]:
        lo, hi = self.k_range
        return tuple(k for k in range(lo, hi + 1) if k not in self.skip)

@dataclass(frozen=True)
class RecordRecipe:
    """Closure of seed codes, kept where K beats a bundled baseline."""
    name: str
    caption: str
    seeds: Tuple[TheoremInputs, ...]
    n_max: int
    k_min: int
    baseline: str = 'binary_baseline.csv'

Recipe = Union[FamilyRecipe, RecordRecipe]

_BINARY_SEEDS = tuple(
    TheoremInputs(q=2, m=4, n=n, k=k)
    for n, k in ((63, 6), (63, 7), (62, 6), (62, 7), (61, 6), (61, 7), (60, 6), (60, 7))
)

RECIPES: Dict[str, "Recipe"] = {
    'table1': RecordRecipe(
        name='table1',
        caption='Binary stabilizer quantum records',
        seeds=_BINARY_SEEDS,
        n_max=252,
        k_min=183,
    ),
    'table2': FamilyRecipe('table2', 'Stabilizer quantum codes over F_4', q=4, m=2, n=76, k_range=(1, 7)),
    'table3': FamilyRecipe('table3', 'Stabilizer quantum codes over F_5', q=5, m=2, n=234, k_range=(4, 11)),
    'f4-153': FamilyRecipe('f4-153', 'Lengthened F_4 codes of length 153', q=4, m=2, n=76, k_range=(3, 6), lengthen=1),
    'f4-765': FamilyRecipe('f4-765', 'F_4 codes of length 765', q=4, m=3, n=255, k_range=(18, 31)),
    'f3-110': FamilyRecipe('f3-110', 'F_3 codes of length 110', q=3, m=2, n=55, k_range=(1, 3)),
    'f7-392': FamilyRecipe('f7-392', 'F_7 codes of length 392', q=7, m=2, n=196, k_range=(4, 24)),
    'f8-566': FamilyRecipe('f8-566', 'F_8 codes of length 566', q=8, m=2, n=283, k_range=(6, 28)),
    'f8-567': FamilyRecipe('f8-567', 'Lengthened F_8 codes of length 567', q=8, m=2, n=283, k_range=(6, 28), lengthen=1),
    'f9-400': FamilyRecipe('f9-400', 'F_9 codes of length 400', q=9, m=2, n=200, k_range=(4, 33)),
    'f9-800': FamilyRecipe('f9-800', 'F_9 codes of length 800', q=9, m=2, n=400, k_range=(4, 40)),
    'f9-810': FamilyRecipe('f9-810', 'F_9 codes of length 810', q=9, m=2, n=405, k_range=(4, 40)),
    'f9-324': FamilyRecipe('f9-324', 'F_9 codes of length 324', q=9, m=2, n=162, k_range=(8, 40), skip=(11,)),
}


def get_recipe(name: str) -> Optional["Recipe"]:
    return RECIPES.get(name)
