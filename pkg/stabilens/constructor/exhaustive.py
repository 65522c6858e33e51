"""
Deterministic k = 1 witnesses.

A single row v is Hermitian self-orthogonal iff sum_i v_i^(e+1) = 0. With
u_i = v_i^(e+1) in F_e^*, this is sum_i u_i = 0, so u_1..u_{n-1} are scanned in
encoding order and u_n is forced to -(u_1 + ... + u_{n-1}).
"""

import itertools
import logging

from ..codes.linear_code import LinearCode
from ..core.errors import NoSolution, TooLarge
from ..gf.field import field_for
from .base import BaseConstructor
from .certificate import Certificate

logger = logging.getLogger(__name__)


class ExhaustiveK1Constructor(BaseConstructor):
    """First all-nonzero single-row witness in scan order."""

    def construct(self, q: int, m: int, n: int, k: int = 1, rng_seed: int = 0) -> Certificate:
        if k != 1:
            raise ValueError(f"the exhaustive scan only builds k = 1 codes, got k={k}")
        e = q ** m
        limit = self.config.constructor.k1_max_order
        if e * e > limit:
            raise TooLarge(e * e, limit, hint="field order above the k = 1 scan limit")
        if not 2 <= n <= e * e:
            raise ValueError(f"need 2 <= n <= {e * e}, got n={n}")
        field = field_for(q, m)
        units = [u for u in field.fixed_subfield() if u]

        scanned = 0
        for head in itertools.product(units, repeat=n - 1):
            scanned += 1
            total = 0
            for u in head:
                total = field.add_int(total, u)
            last = field.neg_int(total)
            if not last:
                continue
            row = [field.norm_preimage_int(u) for u in head + (last,)]
            code = LinearCode.from_rows(field, [row], n)
            cert = self.certify(field, code, rng_seed=None, multipliers=row)
            if cert is not None:
                logger.info("k = 1 witness of length %d over F_%d after %d candidates", n, field.order, scanned)
                return cert
        raise NoSolution(q, m, n)


def exhaustive_construct_k1(q: int, m: int, n: int, config=None) -> Certificate:
    return ExhaustiveK1Constructor(config).construct(q, m, n)
