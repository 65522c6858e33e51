"""
Stabilizer parameters from Hermitian self-orthogonal codes.

A Hermitian self-orthogonal [n, k]_{q^{2m}} code whose Hermitian dual has
distance d gives an [[m*n, m*n - 2*m*k, >= d]]_q stabilizer code; m = 1 is the
classical F_{q^2} construction.
"""

import logging
from typing import Optional

from ..core.errors import DimensionOverflow, KTooLarge, NOutOfRange
from ..core.types import DerivationRecord, QuantumParams, Rule, TheoremInputs
from ..partition.kmax import kmax

logger = logging.getLogger(__name__)


def derive_extended(q: int, m: int, n: int, k: int, d_dual: int) -> QuantumParams:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if k < 0 or 2 * k > n:
        raise DimensionOverflow(n, k)
    if d_dual < 1:
        raise ValueError(f"dual distance must be positive, got {d_dual}")
    return QuantumParams(q=q, N=m * n, K=m * n - 2 * m * k, D=d_dual)


def derive_base(q: int, n: int, k: int, d_dual: int) -> QuantumParams:
    return derive_extended(q, 1, n, k, d_dual)


def derive_from_theorem(q: int, m: int, n: int, k: int) -> DerivationRecord:
    """
    Parameters from the K_n codes: for 1 <= k <= K_n there is an [n, k]
    Hermitian self-orthogonal code over F_{q^{2m}} with dual distance k + 1.
    """
    e = q ** m
    bound = kmax(e, n)
    if not 1 <= k <= bound.value:
        raise KTooLarge(k, bound.value)
    params = derive_extended(q, m, n, k, k + 1)
    rule = Rule.BASE_HERMITIAN if m == 1 else Rule.EXTENSION
    logger.debug("theorem (q=%d, m=%d, n=%d, k=%d) -> %s", q, m, n, k, params)
    return DerivationRecord(params=params, rule=rule, inputs=TheoremInputs(q=q, m=m, n=n, k=k))


def infer_inputs(params: QuantumParams) -> Optional[TheoremInputs]:
    """
    Recover (q, m, n, k) for parameters of the form [[mn, mn - 2mk, >= k+1]]_q,
    or None when no admissible choice exists.
    """
    k = params.D - 1
    gap = params.N - params.K
    if k < 1 or gap % (2 * k):
        return None
    m = gap // (2 * k)
    if m < 1 or params.N % m:
        return None
    n = params.N // m
    try:
        if k <= kmax(params.q ** m, n).value:
            return TheoremInputs(q=params.q, m=m, n=n, k=k)
    except (ValueError, NOutOfRange):
        return None
    return None


def record_from_params(params: QuantumParams) -> DerivationRecord:
    """Root record for parameters that the K_n construction produces directly."""
    inputs = infer_inputs(params)
    if inputs is None:
        raise ValueError(f"{params} is not produced by the K_n construction")
    return derive_from_theorem(inputs.q, inputs.m, inputs.n, inputs.k)
