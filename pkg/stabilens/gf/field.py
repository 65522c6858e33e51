"""
Exact arithmetic in finite fields F_{p^s}.

A FieldSpec pins the characteristic, the degree and the modulus polynomial.
When the field plays the role of F_{q^{2m}}, ``conj_exponent`` holds E = q^m
and ``conj`` is the map x -> x^E used by the Hermitian inner product.
Elements are encoded canonically as the integer sum(c_i * p^i).
"""

import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ..core.config import config
from ..core.errors import (
    ConjOnOddDegree, DegreeTooLarge, DivisionByZero, FieldMismatch, InvalidModulus,
    NoConjugation, NonPrime, NotInSubfield, ZeroInput,
)
from ..utils import NumberUtils
from . import polynomials
from .kernel import FieldTables

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldSpec:
    """An explicit finite field F_{p^s}; immutable and safe to share."""
    p: int
    s: int
    modulus: Tuple[int, ...]
    conj_exponent: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'modulus', tuple(int(c) for c in self.modulus))
        if not NumberUtils.is_prime(self.p):
            raise NonPrime(self.p)
        if self.s < 1:
            raise InvalidModulus(self.modulus, f"degree s must be positive, got {self.s}")
        if len(self.modulus) != self.s + 1:
            raise InvalidModulus(self.modulus, f"expected {self.s + 1} coefficients")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise InvalidModulus(self.modulus, f"coefficients must lie in [0, {self.p})")
        if self.modulus[-1] != 1:
            raise InvalidModulus(self.modulus, "modulus is not monic")
        if not polynomials.is_irreducible(self.modulus, self.p):
            raise InvalidModulus(self.modulus, f"reducible over F_{self.p}")
        if self.conj_exponent is not None:
            if self.conj_exponent < 1 or self.conj_exponent ** 2 != self.p ** self.s:
                raise InvalidModulus(
                    self.modulus, f"conj exponent {self.conj_exponent} squared is not {self.p}^{self.s}")

    # --- basic facts ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self.p ** self.s

    @property
    def has_conjugation(self) -> bool:
        return self.conj_exponent is not None

    @cached_property
    def tables(self) -> Optional[FieldTables]:
        if self.order > config.field.table_limit:
            return None
        return FieldTables(self)

    def __repr__(self) -> str:
        conj = f", E={self.conj_exponent}" if self.conj_exponent else ""
        return f"F_{self.order}(p={self.p}, s={self.s}{conj})"

    # --- encoding ------------------------------------------------------------

    def encode(self, coeffs: Sequence[int]) -> int:
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + (c % self.p)
        return value

    def decode(self, value: int) -> Tuple[int, ...]:
        coeffs = []
        for _ in range(self.s):
            value, c = divmod(value, self.p)
            coeffs.append(c)
        return tuple(coeffs)

    def element(self, value: Union[int, Sequence[int], 'FieldElement']) -> 'FieldElement':
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(value.field, self)
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"encoding {value} outside [0, {self.order})")
            return FieldElement(self, self.decode(value))
        coeffs = tuple(int(c) for c in value)
        if len(coeffs) != self.s or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"expected {self.s} residues mod {self.p}, got {list(coeffs)}")
        return FieldElement(self, coeffs)

    @property
    def zero(self) -> 'FieldElement':
        return self.element(0)

    @property
    def one(self) -> 'FieldElement':
        return self.element(1)

    def elements(self) -> Iterator['FieldElement']:
        for value in range(self.order):
            yield self.element(value)

    def fixed_subfield(self) -> List[int]:
        """Encodings of {x : conj(x) = x}, i.e. the subfield F_E."""
        if self.conj_exponent is None:
            raise NoConjugation(self)
        return [v for v in range(self.order) if self.conj_int(v) == v]

    # --- integer kernel ------------------------------------------------------

    def add_int(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.s == 1:
            return (a + b) % self.p
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, self.p)
            b, db = divmod(b, self.p)
            out += ((da + db) % self.p) * scale
            scale *= self.p
        return out

    def neg_int(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.s == 1:
            return (-a) % self.p
        out, scale = 0, 1
        while a:
            a, da = divmod(a, self.p)
            out += ((-da) % self.p) * scale
            scale *= self.p
        return out

    def sub_int(self, a: int, b: int) -> int:
        return self.add_int(a, self.neg_int(b))

    def _mul_poly(self, a: int, b: int) -> int:
        product = polynomials.mul(self.decode(a), self.decode(b), self.p)
        return self.encode(polynomials.mod(product, self.modulus, self.p))

    def _pow_poly(self, a: int, exponent: int) -> int:
        result, base = 1, a
        while exponent:
            if exponent & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            exponent >>= 1
        return result

    def mul_int(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.s == 1:
            return (a * b) % self.p
        tables = self.tables
        if tables is None:
            return self._mul_poly(a, b)
        return tables.exp[tables.log[a] + tables.log[b]]

    def pow_int(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return self.pow_int(self.inv_int(a), -exponent)
        if exponent == 0:
            return 1
        if a == 0:
            return 0
        if self.s == 1:
            return pow(a, exponent, self.p)
        tables = self.tables
        if tables is None:
            return self._pow_poly(a, exponent)
        return tables.exp[(tables.log[a] * exponent) % (self.order - 1)]

    def inv_int(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero()
        if self.s == 1:
            return pow(a, self.p - 2, self.p)
        tables = self.tables
        if tables is None:
            return self._pow_poly(a, self.order - 2)
        return tables.exp[(self.order - 1 - tables.log[a]) % (self.order - 1)]

    def conj_int(self, a: int) -> int:
        if self.conj_exponent is None:
            raise NoConjugation(self)
        return self.pow_int(a, self.conj_exponent)

    @cached_property
    def _norm_preimages(self) -> Dict[int, int]:
        """First v (in encoding order) with v^(E+1) = u, for every norm value u."""
        preimages: Dict[int, int] = {}
        exponent = self.conj_exponent + 1
        for v in range(1, self.order):
            preimages.setdefault(self.pow_int(v, exponent), v)
        return preimages

    def norm_preimage_int(self, u: int) -> int:
        if self.conj_exponent is None:
            raise NoConjugation(self)
        if u == 0:
            raise ZeroInput()
        if self.conj_int(u) != u:
            raise NotInSubfield(u)
        return self._norm_preimages[u]

    # --- serialisation -------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            's': self.s,
            'modulus': list(self.modulus),
            'conj_exponent': self.conj_exponent,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FieldSpec':
        return cls(
            p=int(data['p']),
            s=int(data['s']),
            modulus=tuple(int(c) for c in data['modulus']),
            conj_exponent=None if data.get('conj_exponent') is None else int(data['conj_exponent']),
        )


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldSpec stored as little-endian coefficients."""
    field: FieldSpec = dc_field(repr=False)
    coeffs: Tuple[int, ...] = ()

    @cached_property
    def value(self) -> int:
        return self.field.encode(self.coeffs)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({self.value} in F_{self.field.order})"

    def _check(self, other: 'FieldElement') -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(self.field, other.field)

    def _wrap(self, value: int) -> 'FieldElement':
        return FieldElement(self.field, self.field.decode(value))

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return self._wrap(self.field.add_int(self.value, other.value))

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return self._wrap(self.field.sub_int(self.value, other.value))

    def __neg__(self) -> 'FieldElement':
        return self._wrap(self.field.neg_int(self.value))

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return self._wrap(self.field.mul_int(self.value, other.value))

    def __truediv__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return self._wrap(self.field.mul_int(self.value, self.field.inv_int(other.value)))

    def __pow__(self, exponent: int) -> 'FieldElement':
        return self._wrap(self.field.pow_int(self.value, exponent))


# --- public operations -------------------------------------------------------

def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x._wrap(x.field.inv_int(x.value))


def power(x: FieldElement, exponent: int) -> FieldElement:
    """Square-and-multiply exponentiation (negative exponents invert first)."""
    return x ** exponent


def conj(x: FieldElement) -> FieldElement:
    """The conjugation x -> x^E; an involution because E^2 = |F|."""
    return x._wrap(x.field.conj_int(x.value))


def norm_preimage(u: FieldElement) -> FieldElement:
    """Smallest v (by encoding) with v^(E+1) = u, for nonzero u in F_E."""
    return u._wrap(u.field.norm_preimage_int(u.value))


@lru_cache(maxsize=None)
def _cached_field(p: int, s: int, conj: bool) -> FieldSpec:
    modulus = polynomials.smallest_irreducible(p, s)
    logger.debug("modulus for F_%d^%d: %s", p, s, list(modulus))
    return FieldSpec(p=p, s=s, modulus=modulus, conj_exponent=p ** (s // 2) if conj else None)


def make_field(p: int, s: int, conj: bool = False) -> FieldSpec:
    """
    Build F_{p^s} with the lexicographically smallest monic irreducible modulus.

    With ``conj`` set the field is treated as F_{E^2} and gets E = p^(s/2).
    Repeated calls return the same (cached) FieldSpec.
    """
    if not NumberUtils.is_prime(p):
        raise NonPrime(p)
    if s < 1:
        raise ValueError(f"extension degree must be positive, got s={s}")
    if p ** s > config.field.max_order:
        raise DegreeTooLarge(p, s, config.field.max_order)
    if conj and s % 2:
        raise ConjOnOddDegree(s)
    return _cached_field(p, s, bool(conj))


def field_for(q: int, m: int) -> FieldSpec:
    """F_{q^{2m}} with conjugation exponent q^m."""
    pr = NumberUtils.prime_power(q)
    if pr is None:
        raise ValueError(f"q={q} is not a prime power")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    p, r = pr
    return make_field(p, 2 * r * m, conj=True)
