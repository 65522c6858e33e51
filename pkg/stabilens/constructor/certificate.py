"""
Certificates: serialized witness codes whose claims can be re-checked from
the generator matrix alone.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from ..core.errors import MalformedCertificate, StabiLensError
from ..core.types import DistanceMethod
from ..codes.distance import dual_distance_via_columns
from ..codes.hermitian import hermitian_dual, is_hermitian_self_orthogonal
from ..codes.linear_code import LinearCode
from ..gf.field import FieldSpec

logger = logging.getLogger(__name__)


def _field_vector(field_spec: FieldSpec, values: Optional[List[Any]], name: str) -> Optional[List[int]]:
    if values is None:
        return None
    vector = [int(v) for v in values]
    outside = [v for v in vector if not 0 <= v < field_spec.order]
    if outside:
        raise ValueError(f"{name} {outside} lie outside F_{field_spec.order}")
    return vector


@dataclass(frozen=True)
class Certificate:
    """A Hermitian self-orthogonal code with its claimed and checked properties."""
    field: FieldSpec
    code: LinearCode
    claimed: Dict[str, int]
    checks: Dict[str, Any]
    rng_seed: Optional[int] = None
    points: Optional[List[int]] = None
    multipliers: Optional[List[int]] = None

    def __post_init__(self):
        f = self.field
        if f.s % 2 or f.conj_exponent != f.p ** (f.s // 2):
            raise MalformedCertificate(
                f"F_{f.p}^{f.s} with conj_exponent {f.conj_exponent} is not a quadratic extension with conjugation"
            )

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    def to_dict(self) -> Dict[str, Any]:
        return {
            'field': self.field.to_dict(),
            'n': self.code.n,
            'k': self.code.k,
            'generator': [list(r) for r in self.code.rows],
            'claimed': dict(self.claimed),
            'checks': dict(self.checks),
            'rng_seed': self.rng_seed,
            'points': self.points,
            'multipliers': self.multipliers,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Certificate':
        try:
            field_spec = FieldSpec.from_dict(data['field'])
            code = LinearCode(field=field_spec, n=int(data['n']),
                              rows=tuple(tuple(int(x) for x in r) for r in data['generator']))
            claimed = {key: int(data['claimed'][key]) for key in ('n', 'k', 'dual_distance')}
            checks = dict(data.get('checks') or {})
            seed = data.get('rng_seed')
            seed = None if seed is None else int(seed)
            header_k = int(data.get('k', code.k))
            points = _field_vector(field_spec, data.get('points'), 'points')
            multipliers = _field_vector(field_spec, data.get('multipliers'), 'multipliers')
        except KeyError as e:
            raise MalformedCertificate(f"missing field {e}")
        except (TypeError, ValueError, StabiLensError) as e:
            raise MalformedCertificate(str(e))
        if header_k != code.k:
            raise MalformedCertificate(f"header says k={header_k} but generator has {code.k} rows")
        return cls(
            field=field_spec,
            code=code,
            claimed=claimed,
            checks=checks,
            rng_seed=seed,
            points=points,
            multipliers=multipliers,
        )

    @classmethod
    def from_json(cls, text: str) -> 'Certificate':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedCertificate(f"invalid JSON: {e}")
        if not isinstance(data, dict):
            raise MalformedCertificate("top-level JSON value must be an object")
        return cls.from_dict(data)


def run_checks(code: LinearCode, max_enum: Optional[int] = None) -> Dict[str, Any]:
    """Self-orthogonality, Hermitian dual dimension and dual distance of ``code``."""
    checks: Dict[str, Any] = {
        'self_orthogonal': is_hermitian_self_orthogonal(code),
        'dual_dim': hermitian_dual(code).k,
        'dual_distance': None,
        'method': DistanceMethod.COLUMN_DEPENDENCE.value,
    }
    if code.k < code.n:
        checks['dual_distance'] = dual_distance_via_columns(code, max_enum).value
    return checks


def _evaluation_failures(cert: Certificate) -> List[str]:
    failed = []
    field_spec, code = cert.field, cert.code
    if cert.multipliers is not None:
        if len(cert.multipliers) != code.n:
            failed.append('multipliers_length')
        elif not all(cert.multipliers):
            failed.append('multipliers_nonzero')
    if cert.points is None:
        return failed
    if len(cert.points) != code.n:
        failed.append('points_length')
        return failed
    if len(set(cert.points)) != code.n:
        failed.append('points_distinct')
    if cert.multipliers is not None and 'multipliers_length' not in failed:
        expected = tuple(
            tuple(field_spec.mul_int(v, field_spec.pow_int(a, s)) for a, v in zip(cert.points, cert.multipliers))
            for s in range(code.k)
        )
        if expected != code.rows:
            failed.append('generator_matches_points')
    return failed


def failed_checks(cert: Union[Certificate, Dict[str, Any]], max_enum: Optional[int] = None) -> List[str]:
    """Names of every check that fails when recomputed from the serialized matrix."""
    if isinstance(cert, dict):
        try:
            cert = Certificate.from_dict(cert)
        except MalformedCertificate as e:
            logger.info("certificate rejected: %s", e.reason)
            return [f"malformed: {e.reason}"]
    code = cert.code
    failed = []
    if cert.claimed.get('n') != code.n:
        failed.append('claimed_n')
    if cert.claimed.get('k') != code.k:
        failed.append('claimed_k')
    checks = run_checks(code, max_enum)
    if not checks['self_orthogonal']:
        failed.append('self_orthogonal')
    if checks['dual_dim'] != code.n - code.k:
        failed.append('dual_dim')
    if checks['dual_distance'] is None or checks['dual_distance'] != cert.claimed.get('dual_distance'):
        failed.append('dual_distance')
    failed.extend(_evaluation_failures(cert))
    if failed:
        logger.info("certificate for [%d,%d] fails: %s", code.n, code.k, ', '.join(failed))
    return failed


def verify(cert: Union[Certificate, Dict[str, Any]], max_enum: Optional[int] = None) -> bool:
    """True iff every recomputed check passes and matches the claims; stored checks are ignored."""
    return not failed_checks(cert, max_enum)
