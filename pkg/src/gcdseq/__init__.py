"""gcdseq: exact-arithmetic workbench for gcd-filtered prime-generating
sequences, their generalized families, and the finite continued-fraction
identities they satisfy.

The hot modular-chain kernels live in a compiled extension with a
pure-Python fallback selected at import; ``backend_name()`` tells which one
is active.
"""

from ._backend import HAVE_EXTENSION, backend_name
from .families import (
    MAIN,
    ROWLAND,
    Classification,
    FamilySpec,
    Kind,
    Strategy,
    TermRecord,
    linear,
    quadratic,
    scan,
    term,
)
from .primality import PrimalityVerdict, Verdict, is_prime
from .recurrences import b, b_via_left_factorial, left_factorial, rowland_diff, rowland_term

__version__ = "0.1.0"

__all__ = [
    "HAVE_EXTENSION",
    "MAIN",
    "ROWLAND",
    "Classification",
    "FamilySpec",
    "Kind",
    "PrimalityVerdict",
    "Strategy",
    "TermRecord",
    "Verdict",
    "__version__",
    "b",
    "b_via_left_factorial",
    "backend_name",
    "is_prime",
    "left_factorial",
    "linear",
    "quadratic",
    "rowland_diff",
    "rowland_term",
    "scan",
    "term",
]
