"""
Dense polynomials over a prime field F_p.

Polynomials are little-endian coefficient tuples (c_0, c_1, ..., c_d). These
helpers back the modulus search and the table-free multiplication path.
"""

from itertools import product
from typing import Iterator, Sequence, Tuple

Poly = Tuple[int, ...]


def trim(coeffs: Sequence[int]) -> Poly:
    """Drop trailing zero coefficients (the zero polynomial becomes ())."""
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def degree(coeffs: Sequence[int]) -> int:
    """Degree of a polynomial; -1 for the zero polynomial."""
    return len(trim(coeffs)) - 1


def mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = (out[i + j] + ai * bj) % p
    return trim(out)


def mod(a: Sequence[int], m: Sequence[int], p: int) -> Poly:
    """Remainder of a modulo the monic polynomial m."""
    m = trim(m)
    dm = len(m) - 1
    rem = list(trim(a))
    lead_inv = pow(m[-1], p - 2, p) if m[-1] != 1 else 1
    while len(rem) - 1 >= dm and rem:
        coef = (rem[-1] * lead_inv) % p
        shift = len(rem) - 1 - dm
        if coef:
            for i, mi in enumerate(m):
                rem[shift + i] = (rem[shift + i] - coef * mi) % p
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return tuple(rem)


def monic_polynomials(deg: int, p: int) -> Iterator[Poly]:
    """Monic polynomials of one degree, ascending in sum(c_i * p^i)."""
    # product() varies its last slot fastest, so reverse to make c_0 fastest
    for tail in product(range(p), repeat=deg):
        yield tuple(reversed(tail)) + (1,)


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    f = trim(coeffs)
    d = len(f) - 1
    if d < 1:
        return False
    for div_deg in range(1, d // 2 + 1):
        for divisor in monic_polynomials(div_deg, p):
            if not mod(f, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, s: int) -> Poly:
    """
    Lexicographically smallest monic irreducible polynomial of degree s.

    Candidates are scanned in ascending order of sum(c_i * p^i) over the
    non-leading coefficients. A zero constant term is skipped, which only
    matters for s = 1 (where it rules out the modulus x).
    """
    for candidate in monic_polynomials(s, p):
        if candidate[0] == 0:
            continue
        if is_irreducible(candidate, p):
            return candidate
    raise RuntimeError(f"no irreducible polynomial of degree {s} over F_{p}")
