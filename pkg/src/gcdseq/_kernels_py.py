"""Pure-Python modular-chain kernels.

Drop-in equivalents of the compiled routines in ``_kernel``, with no size
limits on the modulus: plain Python integers throughout.
"""


def b_mod_pair(t, x):
    """Return ``(b(t-1) mod x, b(t) mod x)`` for t >= 0, x >= 1.

    Runs the whole second-order chain b(j) = (j+2)(b(j-1) - b(j-2)) from
    b(-1) = 0, b(0) = 1 with every intermediate reduced mod x.
    """
    prev, cur = 0, 1 % x
    for j in range(1, t + 1):
        prev, cur = cur, ((j + 2) * (cur - prev)) % x
    return prev, cur


def factorial_mod(m, x):
    """Return ``m! mod x`` for m >= 0, x >= 1; short-circuits once 0."""
    r = 1 % x
    for j in range(2, m + 1):
        r = (r * j) % x
        if r == 0:
            return 0
    return r
