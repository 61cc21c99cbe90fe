import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcdseq.errors import NonPositive
from gcdseq.primality import (
    Method,
    Verdict,
    _bpsw_is_probable_prime,
    _mr_is_prime,
    is_prime,
)


def _sieve(limit):
    flags = bytearray(b"\x01") * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit, p))
    return flags


def test_small_verdicts():
    assert is_prime(1).verdict is Verdict.ONE
    assert is_prime(2).verdict is Verdict.PRIME
    assert is_prime(9).verdict is Verdict.COMPOSITE
    assert is_prime(1259).verdict is Verdict.PRIME
    assert is_prime(1259).method is Method.TRIAL_DIVISION


def test_nonpositive_raises():
    for v in (0, -1, -97):
        with pytest.raises(NonPositive):
            is_prime(v)


def test_verdict_truthiness():
    assert is_prime(7)
    assert is_prime(2**89 - 1)
    assert not is_prime(1)
    assert not is_prime(561)


def test_method_selection_by_size():
    assert is_prime(999_983).method is Method.TRIAL_DIVISION
    assert is_prime(1_000_003).method is Method.DETERMINISTIC_MR64
    assert is_prime(2**64 + 13).method is Method.STRONG_PROBABLE


def test_exhaustive_agreement_below_one_million():
    # the Miller-Rabin path against a sieve, every value
    limit = 10**6
    flags = _sieve(limit)
    for v in range(2, limit):
        assert _mr_is_prime(v) == bool(flags[v]), v


def test_known_miller_rabin_stress_values():
    # composites that fool many single-base tests
    for v in (561, 25326001, 3215031751, 3825123056546413051):
        assert is_prime(v).verdict is Verdict.COMPOSITE
    # 3825123056546413051 == 149491 * 747451 * 34233211
    assert 149491 * 747451 * 34233211 == 3825123056546413051


def test_u64_boundary():
    assert is_prime(2**64 - 59).verdict is Verdict.PRIME
    assert is_prime(2**64 - 59).method is Method.DETERMINISTIC_MR64


def test_above_u64_probable_primes():
    for v in (2**64 + 13, 2**89 - 1, 2**107 - 1, 2**127 - 1, 10**20 + 39):
        verdict = is_prime(v)
        assert verdict.verdict is Verdict.PROBABLE_PRIME
        assert verdict.method is Method.STRONG_PROBABLE


def test_above_u64_composites_with_witnessed_factors():
    # 2^64 + 1 = 274177 * 67280421310721 (checked right here)
    assert 274177 * 67280421310721 == 2**64 + 1
    assert is_prime(2**64 + 1).verdict is Verdict.COMPOSITE
    # 167 divides 2^83 - 1 because 2^83 == 1 (mod 167)
    assert pow(2, 83, 167) == 1
    assert is_prime(2**83 - 1).verdict is Verdict.COMPOSITE
    # perfect squares above the 64-bit line
    assert is_prime((2**33 + 15) ** 2).verdict is Verdict.COMPOSITE


def test_bpsw_components_cover_each_other():
    from gcdseq.primality import _strong_lucas_prp

    # base-2 strong pseudoprimes: the Lucas side must reject them
    for v in (2047, 3277, 4033, 4681, 8321, 15841, 29341, 42799, 49141, 52633,
              65281, 74665, 80581, 85489, 88357, 90751):
        assert not _bpsw_is_probable_prime(v), v
    # strong Lucas-Selfridge pseudoprimes: the base-2 side must reject them
    for v in (5459, 5777, 10877, 16109, 18971):
        assert _strong_lucas_prp(v), v
        assert not _bpsw_is_probable_prime(v), v


def test_bpsw_exhaustive_small():
    flags = _sieve(100_000)
    for v in range(2, 100_000):
        assert _bpsw_is_probable_prime(v) == bool(flags[v]), v


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=2, max_value=2**64 - 1))
def test_bpsw_agrees_with_deterministic_mr(v):
    assert _bpsw_is_probable_prime(v) == _mr_is_prime(v)
