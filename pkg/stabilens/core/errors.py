"""
Exception hierarchy for StabiLens.

Every error raised on purpose by the library derives from StabiLensError, so the
CLI can separate usage problems from genuine crashes.
"""

from typing import Optional


class StabiLensError(Exception):
    """Base class for all library errors."""


# --- gf-core -----------------------------------------------------------------

class NonPrime(StabiLensError, ValueError):
    def __init__(self, p: int):
        self.p = p
        super().__init__(f"characteristic {p} is not prime")


class DegreeTooLarge(StabiLensError, ValueError):
    def __init__(self, p: int, s: int, limit: int):
        self.p, self.s, self.limit = p, s, limit
        super().__init__(f"field order {p}^{s} exceeds the desk-scale limit {limit}")


class ConjOnOddDegree(StabiLensError, ValueError):
    def __init__(self, s: int):
        self.s = s
        super().__init__(f"conjugation needs an even extension degree, got s={s}")


class InvalidModulus(StabiLensError, ValueError):
    def __init__(self, modulus, reason: str):
        self.modulus = tuple(modulus)
        self.reason = reason
        super().__init__(f"invalid modulus {list(self.modulus)}: {reason}")


class FieldMismatch(StabiLensError, ValueError):
    def __init__(self, left=None, right=None):
        self.left, self.right = left, right
        super().__init__("operands belong to different fields")


class DivisionByZero(StabiLensError, ZeroDivisionError):
    def __init__(self):
        super().__init__("zero has no multiplicative inverse")


class NoConjugation(StabiLensError):
    def __init__(self, field=None):
        self.field = field
        super().__init__("field has no conjugation exponent set")


class NotInSubfield(StabiLensError, ValueError):
    def __init__(self, value: int):
        self.value = value
        super().__init__(f"element {value} is not fixed by conjugation")


class ZeroInput(StabiLensError, ValueError):
    def __init__(self):
        super().__init__("zero has no norm preimage")


# --- code-algebra ------------------------------------------------------------

class LengthMismatch(StabiLensError, ValueError):
    def __init__(self, left: int, right: int):
        self.left, self.right = left, right
        super().__init__(f"vector lengths differ: {left} != {right}")


class RankDeficient(StabiLensError, ValueError):
    def __init__(self, rows: int, rank: int):
        self.rows, self.rank = rows, rank
        super().__init__(f"generator has {rows} rows but rank {rank}")


class TooLarge(StabiLensError):
    def __init__(self, size: int, limit: int, hint: Optional[str] = None):
        self.size, self.limit = size, limit
        message = f"enumeration size {size} exceeds limit {limit}"
        if hint:
            message += f"; {hint}"
        super().__init__(message)


# --- partition-kmax ----------------------------------------------------------

class EOutOfRange(StabiLensError, ValueError):
    def __init__(self, e: int):
        self.e = e
        super().__init__(f"e must exceed 2 and be a prime power, got e={e}")


class NOutOfRange(StabiLensError, ValueError):
    def __init__(self, e: int, n: int):
        self.e, self.n = e, n
        super().__init__(f"n must satisfy 2 <= n <= e^2 = {e * e}, got n={n}")


# --- qecc-derive -------------------------------------------------------------

class DimensionOverflow(StabiLensError, ValueError):
    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        super().__init__(f"2k must not exceed n, got n={n}, k={k}")


class DimensionUnderflow(StabiLensError, ValueError):
    def __init__(self, K: int):
        self.K = K
        super().__init__(f"subcode needs K >= 1, got K={K}")


class KTooLarge(StabiLensError, ValueError):
    def __init__(self, k: int, kmax: int):
        self.k, self.kmax = k, kmax
        super().__init__(f"k={k} exceeds K_n={kmax}; valid range is 1..{kmax}")


class BudgetExceeded(StabiLensError):
    def __init__(self, size: int, limit: int):
        self.size, self.limit = size, limit
        super().__init__(f"closure frontier reached {size} entries (limit {limit})")


class NoValidExtension(StabiLensError, ValueError):
    def __init__(self, q: int, N: int, d: int):
        self.q, self.N, self.d = q, N, d
        super().__init__(f"no extension degree yields [[{N}, *, >={d}]]_{q}")


# --- hso-constructor ---------------------------------------------------------

class SearchExhausted(StabiLensError):
    def __init__(self, q: int, m: int, n: int, k: int, trials: int):
        self.q, self.m, self.n, self.k, self.trials = q, m, n, k, trials
        super().__init__(
            f"no witness for (q={q}, m={m}, n={n}, k={k}) after {trials} point sets "
            "(search budget, not a disproof)"
        )


class NoSolution(StabiLensError):
    def __init__(self, q: int, m: int, n: int):
        self.q, self.m, self.n = q, m, n
        super().__init__(f"no all-nonzero weight vector for (q={q}, m={m}, n={n})")


class MalformedCertificate(StabiLensError, ValueError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"malformed certificate: {reason}")


# --- catalog -----------------------------------------------------------------

class UnknownTable(StabiLensError, ValueError):
    def __init__(self, name: str, known):
        self.name = name
        self.known = sorted(known)
        super().__init__(f"unknown table '{name}'; choose one of {', '.join(self.known)}")


class MalformedCSV(StabiLensError, ValueError):
    def __init__(self, path: str, line: int, reason: str):
        self.path, self.line, self.reason = path, line, reason
        super().__init__(f"{path}:{line}: {reason}")
