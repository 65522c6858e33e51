"""
K_n, the largest dimension reachable from a partition witness.

Write n = a*e + b (e-adic form, with n = e^2 read as a = e, b = 0). The value
K_n is selected by four cases, and each case comes with an explicit partition
n = n_1 + ... + n_t, t <= e, 2 <= n_i <= e, whose smallest part is at least
2*K_n. That partition is what licenses an [n, k]_{e^2} Hermitian
self-orthogonal code with Hermitian dual distance k + 1 for every k <= K_n.
"""

import logging
from dataclasses import dataclass, field
from typing import List

from ..core.errors import EOutOfRange, NOutOfRange
from ..core.types import EadicForm, KmaxCase, KmaxResult, Partition
from ..utils import NumberUtils

logger = logging.getLogger(__name__)

BRANCH_BALANCED = 'balanced-split'
BRANCH_BLOCKS = 'e-1-blocks'


@dataclass(frozen=True)
class PartitionCheck:
    """Outcome of validate_partition; truthy when every hypothesis holds."""
    ok: bool
    reasons: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def eadic(e: int, n: int) -> EadicForm:
    if e <= 2 or not NumberUtils.is_prime_power(e):
        raise EOutOfRange(e)
    if not 2 <= n <= e * e:
        raise NOutOfRange(e, n)
    if n == e * e:
        return EadicForm(e=e, n=n, a=e, b=0)
    a, b = divmod(n, e)
    return EadicForm(e=e, n=n, a=a, b=b)


def classify(form: EadicForm) -> KmaxCase:
    if form.b == 0:
        return KmaxCase.B_ZERO
    if form.a == 0:
        return KmaxCase.A_ZERO
    if form.a + form.b >= form.e:
        return KmaxCase.OVERFLOW
    return KmaxCase.BALANCED


def _balanced_parts(n: int, t: int) -> List[int]:
    size, extra = divmod(n, t)
    return [size + 1] * extra + [size] * (t - extra)


def partition_witness(e: int, n: int) -> Partition:
    form = eadic(e, n)
    e, a, b = form.e, form.a, form.b
    case = classify(form)

    if case is KmaxCase.B_ZERO:
        return Partition(parts=(e,) * a)
    if case is KmaxCase.A_ZERO:
        return Partition(parts=(n,))
    if case is KmaxCase.OVERFLOW:
        # i*e + j*(e-1) + (e-1) = n with i + j = a
        j = e - 1 - b
        i = a - j
        if not 0 <= j <= a:
            raise AssertionError(f"overflow witness out of range: e={e}, n={n}, j={j}")
        return Partition(parts=(e,) * i + (e - 1,) * (j + 1))

    split = n // (a + 1)
    if split >= a + b:
        return Partition(parts=tuple(_balanced_parts(n, a + 1)), branch=BRANCH_BALANCED)
    return Partition(parts=(e - 1,) * a + (a + b,), branch=BRANCH_BLOCKS)


def kmax(e: int, n: int) -> KmaxResult:
    form = eadic(e, n)
    case = classify(form)
    e, a, b = form.e, form.a, form.b

    if case is KmaxCase.B_ZERO:
        value = e // 2
    elif case is KmaxCase.A_ZERO:
        value = n // 2
    elif case is KmaxCase.OVERFLOW:
        value = (e - 1) // 2
    else:
        split = n // (a + 1)
        # n - (a+1)(a+b) = a(e - a - b - 1) >= 0 whenever a + b < e
        if split < a + b:
            raise AssertionError(f"balanced split {split} below a+b={a + b} for e={e}, n={n}")
        value = max(split, a + b) // 2

    witness = partition_witness(e, n)
    if witness.min_part // 2 < value:
        raise AssertionError(f"witness {witness.parts} does not certify K={value}")
    logger.debug("K_%d for e=%d: %d (%s)", n, e, value, case.value)
    return KmaxResult(value=value, case_tag=case, witness=witness, eadic=form)


def validate_partition(e: int, k: int, partition: Partition) -> PartitionCheck:
    """Check the partition hypotheses for dimension k; falsy on any violation."""
    reasons = []
    parts = partition.parts
    if not parts:
        return PartitionCheck(False, ["partition is empty"])
    if len(parts) > e:
        reasons.append(f"{len(parts)} parts exceed e={e}")
    bad = sorted({p for p in parts if not 2 <= p <= e})
    if bad:
        reasons.append(f"parts {bad} outside [2, {e}]")
    if k < 1:
        reasons.append(f"k={k} is not positive")
    if 2 * k > min(parts):
        reasons.append(f"2k={2 * k} exceeds smallest part {min(parts)}")
    return PartitionCheck(not reasons, reasons)
