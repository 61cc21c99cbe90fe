# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled modular-chain kernels.

Word-sized loop for small moduli, 128-bit multiply path up to 2**63.
The dispatcher in ``_backend`` falls back to the pure-Python kernels for
anything larger.
"""

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

# Highest modulus (exclusive) the compiled kernels accept.
MOD_LIMIT = 1 << 63


def b_mod_pair(long long t, u64 x):
    """(b(t-1) mod x, b(t) mod x) for 0 <= t, 1 <= x < 2**63."""
    if t < 0 or x == 0 or x >= (<u64>1) << 63:
        raise ValueError("kernel domain: t >= 0 and 1 <= x < 2**63")
    cdef u64 prev = 0
    cdef u64 cur = 1 % x
    cdef u64 nxt
    cdef long long j
    if x < (<u64>1) << 31 and t < (<long long>1) << 31:
        # (j+2)*(cur + x - prev) < 2**31 * 2**32 fits in 64 bits
        for j in range(1, t + 1):
            nxt = ((<u64>j + 2) * (cur + x - prev)) % x
            prev = cur
            cur = nxt
    else:
        for j in range(1, t + 1):
            nxt = <u64>((<u128>(<u64>j + 2) * (cur + x - prev)) % x)
            prev = cur
            cur = nxt
    return prev, cur


def factorial_mod(long long m, u64 x):
    """m! mod x for 0 <= m, 1 <= x < 2**63; early exit once the product is 0."""
    if m < 0 or x == 0 or x >= (<u64>1) << 63:
        raise ValueError("kernel domain: m >= 0 and 1 <= x < 2**63")
    cdef u64 r = 1 % x
    cdef long long j
    if x < (<u64>1) << 32 and m < (<long long>1) << 32:
        for j in range(2, m + 1):
            r = (r * <u64>j) % x
            if r == 0:
                return 0
    else:
        for j in range(2, m + 1):
            r = <u64>((<u128>r * <u64>j) % x)
            if r == 0:
                return 0
    return r
