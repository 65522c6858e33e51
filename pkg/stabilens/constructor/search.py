"""
Randomised search for Hermitian self-orthogonal evaluation codes.

The code has generator rows (v_1 a_1^s, ..., v_n a_n^s) for s = 0..k-1 with
distinct points a_i in F_Q and nonzero multipliers v_i. Writing u_i = v_i^(e+1),
which lies in F_e, the Hermitian products of the rows are

    g_s ._h g_t = sum_i u_i a_i^(s + t*e),

so self-orthogonality is a linear system in u over F_e. The system is solved
over the prime field, a null-space vector with every u_i nonzero is picked, and
v_i is recovered with norm_preimage. Such a code is generalised Reed-Solomon,
so its Hermitian dual has distance k + 1; the certificate re-checks that.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..codes.linear_code import LinearCode, null_space, rank
from ..core.errors import KTooLarge, SearchExhausted, TooLarge
from ..gf.field import FieldSpec, field_for, make_field
from ..partition.kmax import kmax
from .base import BaseConstructor
from .certificate import Certificate

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _subfield_layout(field: FieldSpec) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """
    (F_e elements, an F_p-basis of F_e, coset representatives of F_Q / F_e).

    The representatives are the F_p-span of a complement to the subfield basis,
    so they hit every additive coset exactly once.
    """
    prime = make_field(field.p, 1)
    subfield = tuple(field.fixed_subfield())
    basis: List[int] = []
    for value in subfield:
        if rank(prime, [field.decode(b) for b in basis + [value]]) > len(basis):
            basis.append(value)
    complement: List[int] = []
    spanned = [field.decode(b) for b in basis]
    for i in range(field.s):
        unit = field.p ** i
        if rank(prime, spanned + [field.decode(unit)]) > len(spanned):
            spanned.append(field.decode(unit))
            complement.append(unit)
    reps = []
    for index in range(field.p ** len(complement)):
        value, rest = 0, index
        for gamma in complement:
            rest, digit = divmod(rest, field.p)
            value = field.add_int(value, field.mul_int(digit, gamma))
        reps.append(value)
    return subfield, tuple(basis), tuple(reps)


class EvaluationCodeConstructor(BaseConstructor):
    """Point-set search for evaluation codes with subfield weights."""

    def sample_points(self, field: FieldSpec, e: int, n: int, rng: np.random.Generator) -> List[int]:
        """
        n distinct points of F_Q.

        With the 'cosets' strategy the points follow the K_n witness partition:
        part n_i is drawn from a single coset beta_i + F_e, distinct cosets per part.
        """
        if self.config.constructor.point_strategy == 'uniform':
            return [int(a) for a in rng.choice(field.order, size=n, replace=False)]
        subfield, _, reps = _subfield_layout(field)
        parts = kmax(e, n).witness.parts
        chosen = rng.choice(len(reps), size=len(parts), replace=False)
        points = []
        for size, rep_index in zip(parts, chosen):
            beta = reps[int(rep_index)]
            for c in rng.choice(len(subfield), size=size, replace=False):
                points.append(field.add_int(beta, subfield[int(c)]))
        return points

    def _system(self, field: FieldSpec, points: Sequence[int], k: int, e: int) -> List[List[int]]:
        """
        Equations over F_p in the unknowns x_ij, where u_i = sum_j x_ij beta_j.

        Equation (t, s) is the conjugate of (s, t) for subfield u, so s <= t suffices.
        """
        _, basis, _ = _subfield_layout(field)
        n, d = len(points), len(basis)
        rows: List[List[int]] = []
        for s in range(k):
            for t in range(s, k):
                coeffs = [field.pow_int(a, s + t * e) for a in points]
                block = [[0] * (n * d) for _ in range(field.s)]
                for i, c in enumerate(coeffs):
                    for j, beta in enumerate(basis):
                        digits = field.decode(field.mul_int(c, beta))
                        for l, digit in enumerate(digits):
                            block[l][i * d + j] = digit
                rows.extend(block)
        return rows

    def _nonzero_solution(self, field: FieldSpec, points: Sequence[int], k: int, e: int,
                          rng: np.random.Generator) -> Optional[List[int]]:
        """A subfield vector u with every entry nonzero solving the system, or None."""
        _, basis, _ = _subfield_layout(field)
        n, d, p = len(points), len(basis), field.p
        prime = make_field(p, 1)
        kernel = null_space(prime, self._system(field, points, k, e), n * d)
        if not kernel:
            return None
        kernel_matrix = np.array(kernel, dtype=np.int64)
        dim = len(kernel)
        budget = self.config.constructor.solution_samples
        chunk = self.config.enumeration.chunk_size
        exhaustive = dim * np.log(p) <= np.log(budget)
        total = p ** dim if exhaustive else budget

        for start in range(0, total, chunk):
            count = min(chunk, total - start)
            if exhaustive:
                idx = np.arange(start, start + count, dtype=np.int64)
                coeffs = np.stack([(idx // p ** j) % p for j in range(dim)], axis=1)
            else:
                coeffs = rng.integers(0, p, size=(count, dim), dtype=np.int64)
            words = (coeffs @ kernel_matrix) % p
            ok = words.reshape(count, n, d).any(axis=2).all(axis=1)
            hits = np.flatnonzero(ok)
            if len(hits):
                x = words[hits[0]].reshape(n, d)
                u = []
                for i in range(n):
                    value = 0
                    for j, beta in enumerate(basis):
                        value = field.add_int(value, field.mul_int(int(x[i, j]), beta))
                    u.append(value)
                return u
        return None

    def attempt(self, field: FieldSpec, e: int, n: int, k: int, rng: np.random.Generator,
                rng_seed: int) -> Optional[Certificate]:
        """One trial: fresh points, solve, lift and certify."""
        points = self.sample_points(field, e, n, rng)
        u = self._nonzero_solution(field, points, k, e, rng)
        if u is None:
            return None
        multipliers = [field.norm_preimage_int(value) for value in u]
        rows = [[field.mul_int(v, field.pow_int(a, s)) for a, v in zip(points, multipliers)] for s in range(k)]
        code = LinearCode.from_rows(field, rows, n)
        return self.certify(field, code, rng_seed=rng_seed, points=points, multipliers=multipliers)

    def construct(self, q: int, m: int, n: int, k: int, rng_seed: int = 0) -> Certificate:
        if rng_seed < 0:
            raise ValueError(f"rng_seed must be non-negative, got {rng_seed}")
        e = q ** m
        bound = kmax(e, n).value
        if not 1 <= k <= bound:
            raise KTooLarge(k, bound)
        limit = self.config.constructor.max_order
        if e * e > limit:
            raise TooLarge(e * e, limit, hint="field order above the constructor's desk-scale limit")
        field = field_for(q, m)

        trials = self.config.constructor.point_sets
        for trial in range(trials):
            # each trial owns a stream, so trial i is reproducible on its own
            rng = np.random.default_rng([rng_seed, trial])
            cert = self.attempt(field, e, n, k, rng, rng_seed)
            if cert is not None:
                logger.info("witness [%d,%d]_%d found at trial %d", n, k, field.order, trial)
                return cert
            logger.debug("trial %d for [%d,%d]_%d failed", trial, n, k, field.order)
        raise SearchExhausted(q, m, n, k, trials)


def construct(q: int, m: int, n: int, k: int, rng_seed: int = 0, config=None) -> Certificate:
    return EvaluationCodeConstructor(config).construct(q, m, n, k, rng_seed)
