"""Primality testing with explicit verdicts.

Three regimes:

* v < 10**6: trial division, cross-checked in-function against the
  Miller-Rabin path (the two must agree; a mismatch raises).
* v < 2**64: Miller-Rabin with the fixed 12-prime base set, which is
  deterministic in this range.
* v >= 2**64: Baillie-PSW style combination (strong base-2 test plus a
  strong Lucas test with Selfridge parameters); reported as a probable
  prime, never as proven.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import NonPositive

_MR64_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 10**6
_U64 = 1 << 64


class Verdict(Enum):
    ONE = "one"
    PRIME = "prime"
    COMPOSITE = "composite"
    PROBABLE_PRIME = "probable_prime"


class Method(Enum):
    TRIAL_DIVISION = "trial_division"
    DETERMINISTIC_MR64 = "deterministic_mr64"
    STRONG_PROBABLE = "strong_probable"


@dataclass(frozen=True)
class PrimalityVerdict:
    value: int
    verdict: Verdict
    method: Method

    def __bool__(self):
        """Truthy iff prime or probable prime."""
        return self.verdict in (Verdict.PRIME, Verdict.PROBABLE_PRIME)


def _trial_division(v):
    if v < 2:
        return False
    if v % 2 == 0:
        return v == 2
    f = 3
    while f * f <= v:
        if v % f == 0:
            return False
        f += 2
    return True


def _mr_round(v, base, d, r):
    x = pow(base, d, v)
    if x == 1 or x == v - 1:
        return True
    for _ in range(r - 1):
        x = x * x % v
        if x == v - 1:
            return True
    return False


def _mr_is_prime(v):
    """Miller-Rabin over the fixed base set; deterministic for v < 2**64."""
    if v < 2:
        return False
    for p in _MR64_BASES:
        if v % p == 0:
            return v == p
    d = v - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    return all(_mr_round(v, base, d, r) for base in _MR64_BASES)


def _jacobi(a, n):
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _selfridge_d(n):
    # first D in 5, -7, 9, -11, ... with Jacobi(D, n) == -1
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            return d
        if j == 0 and abs(d) != n:
            return None  # shares a factor with n: composite
        d = -(d + 2) if d > 0 else -(d - 2)


def _strong_lucas_prp(n):
    """Strong Lucas test with Selfridge parameters; n odd, > 2, not a square."""
    D = _selfridge_d(n)
    if D is None:
        return False
    P = 1
    Q = (1 - D) // 4

    d = n + 1
    s = (d & -d).bit_length() - 1
    d >>= s

    def _half(x):
        # exact division by 2 mod odd n
        return (x if x % 2 == 0 else x + n) // 2 % n

    # Binary ladder over the bits of d: (U_k, V_k, Q^k).
    U, V, qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = _half(P * U + V), _half(D * U + P * V)
            qk = qk * Q % n

    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * qk) % n
        if V == 0:
            return True
        qk = qk * qk % n
    return False


def _bpsw_is_probable_prime(v):
    for p in _MR64_BASES:
        if v % p == 0:
            return v == p
    d = v - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    if not _mr_round(v, 2, d, r):
        return False
    if math.isqrt(v) ** 2 == v:
        return False
    return _strong_lucas_prp(v)


@lru_cache(maxsize=1 << 16)
def is_prime(v: int) -> PrimalityVerdict:
    """Classify v >= 1 as One, Prime, Composite or ProbablePrime."""
    if v < 1:
        raise NonPositive(f"primality undefined for {v} < 1")
    if v == 1:
        return PrimalityVerdict(1, Verdict.ONE, Method.TRIAL_DIVISION)
    if v < _TRIAL_LIMIT:
        by_trial = _trial_division(v)
        if by_trial != _mr_is_prime(v):
            raise RuntimeError(f"primality cross-check mismatch at {v}")
        verdict = Verdict.PRIME if by_trial else Verdict.COMPOSITE
        return PrimalityVerdict(v, verdict, Method.TRIAL_DIVISION)
    if v < _U64:
        verdict = Verdict.PRIME if _mr_is_prime(v) else Verdict.COMPOSITE
        return PrimalityVerdict(v, verdict, Method.DETERMINISTIC_MR64)
    verdict = Verdict.PROBABLE_PRIME if _bpsw_is_probable_prime(v) else Verdict.COMPOSITE
    return PrimalityVerdict(v, verdict, Method.STRONG_PROBABLE)
