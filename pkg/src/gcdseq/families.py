"""The gcd-filtered sequence families and their two term-computation strategies.

A term of the main sequence at index n >= 3 is

    a(n) = x / gcd(x, y),   x = n^2 - n - 1,   y = b(n-3) + n*b(n-4)

and the generalized families swap in a different numerator and partner:

    quad:k    x = n^2 + (k-2)n - k     y = k*b(n-3) + n*b(n-4)
    linear:k  x = (k+1)n - k           y = b(n-2) + k*b(n-3)

``main`` is ``quad:1``. Each term can be computed two ways: materialize y
exactly (ExactBigInt) or run the b-chain entirely in residues mod x
(ModularFast); the two must agree field for field. The Rowland sequence is
carried as a degenerate family whose "terms" are its first differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from . import _backend
from .errors import IndexBelowDomain, UnsupportedFamily
from .primality import Verdict, is_prime
from .recurrences import b, rowland_diff


class Kind(Enum):
    MAIN = "main"
    QUADRATIC = "quad"
    LINEAR = "linear"
    ROWLAND = "rowland"


@dataclass(frozen=True)
class FamilySpec:
    """Which sequence to compute; ``k`` only applies to quad/linear."""

    kind: Kind
    k: int | None = None

    def __post_init__(self):
        if self.kind in (Kind.QUADRATIC, Kind.LINEAR):
            if self.k is None or self.k < 1:
                raise ValueError(f"{self.kind.value} family needs integer k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} family takes no parameter")

    @property
    def first_index(self) -> int:
        return 1 if self.kind is Kind.ROWLAND else 3

    def __str__(self):
        if self.k is not None:
            return f"{self.kind.value}:{self.k}"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``main | quad:<k> | linear:<k> | rowland``."""
        name, _, param = text.strip().partition(":")
        try:
            kind = Kind(name)
        except ValueError:
            raise ValueError(f"unknown family {text!r}") from None
        if kind in (Kind.QUADRATIC, Kind.LINEAR):
            if not param:
                raise ValueError(f"{name} family needs a parameter, e.g. {name}:2")
            try:
                k = int(param)
            except ValueError:
                raise ValueError(f"bad family parameter {param!r}") from None
            return cls(kind, k)
        if param:
            raise ValueError(f"{name} family takes no parameter")
        return cls(kind)


MAIN = FamilySpec(Kind.MAIN)
ROWLAND = FamilySpec(Kind.ROWLAND)


def quadratic(k: int) -> FamilySpec:
    return FamilySpec(Kind.QUADRATIC, k)


def linear(k: int) -> FamilySpec:
    return FamilySpec(Kind.LINEAR, k)


class Strategy(Enum):
    EXACT_BIGINT = "exact"
    MODULAR_FAST = "modular"


class Classification(Enum):
    ONE = "one"
    PRIME = "prime"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class TermRecord:
    """One computed term: a*d == x exactly, y_mod_x is the partner mod x."""

    family: FamilySpec
    n: int
    x: int
    y_mod_x: int
    d: int
    a: int
    classification: Classification

    def as_dict(self):
        return {
            "family": str(self.family),
            "n": self.n,
            "x": self.x,
            "y_mod_x": self.y_mod_x,
            "d": self.d,
            "a": self.a,
            "class": self.classification.value,
        }


def _check_index(family: FamilySpec, n: int):
    if n < family.first_index:
        raise IndexBelowDomain(
            f"{family} starts at n={family.first_index}, got n={n}"
        )


def numerator(family: FamilySpec, n: int) -> int:
    """The unreduced term: the quadratic or linear form evaluated at n."""
    _check_index(family, n)
    if family.kind is Kind.MAIN:
        return n * n - n - 1
    if family.kind is Kind.QUADRATIC:
        return n * n + (family.k - 2) * n - family.k
    if family.kind is Kind.LINEAR:
        return (family.k + 1) * n - family.k
    raise UnsupportedFamily("rowland has no polynomial numerator")


def gcd_partner(family: FamilySpec, n: int) -> int:
    """The quantity paired with the numerator inside the gcd, at full precision."""
    _check_index(family, n)
    if family.kind is Kind.MAIN:
        return b(n - 3) + n * b(n - 4)
    if family.kind is Kind.QUADRATIC:
        return family.k * b(n - 3) + n * b(n - 4)
    if family.kind is Kind.LINEAR:
        return b(n - 2) + family.k * b(n - 3)
    raise UnsupportedFamily("rowland has no gcd partner")


def gcd_partner_residue(family: FamilySpec, n: int, x: int) -> int:
    """The gcd partner reduced mod x, never materializing it.

    The whole b-chain runs in residues mod x, so gcd(x, result) equals
    gcd(x, partner) while every intermediate stays below x.
    """
    _check_index(family, n)
    if family.kind in (Kind.MAIN, Kind.QUADRATIC):
        k = 1 if family.kind is Kind.MAIN else family.k
        b_prev, b_cur = _backend.b_mod_pair(n - 3, x)  # b(n-4), b(n-3)
        return (k * b_cur + n * b_prev) % x
    if family.kind is Kind.LINEAR:
        b_prev, b_cur = _backend.b_mod_pair(n - 2, x)  # b(n-3), b(n-2)
        return (b_cur + family.k * b_prev) % x
    raise UnsupportedFamily("rowland has no gcd partner")


def _classify(a: int) -> Classification:
    if a == 1:
        return Classification.ONE
    v = is_prime(a)
    if v.verdict in (Verdict.PRIME, Verdict.PROBABLE_PRIME):
        return Classification.PRIME
    return Classification.COMPOSITE


def term(family: FamilySpec, n: int, strategy: Strategy = Strategy.MODULAR_FAST) -> TermRecord:
    """Compute one term; both strategies produce identical records."""
    if family.kind is Kind.ROWLAND:
        _check_index(family, n)
        diff = rowland_diff(n)
        return TermRecord(family, n, diff, 0, 1, diff, _classify(diff))
    x = numerator(family, n)
    if strategy is Strategy.EXACT_BIGINT:
        y_mod = gcd_partner(family, n) % x
    else:
        y_mod = gcd_partner_residue(family, n, x)
    d = math.gcd(x, y_mod)
    a = x // d
    return TermRecord(family, n, x, y_mod, d, a, _classify(a))


def scan(
    family: FamilySpec,
    n_from: int,
    n_to: int,
    strategy: Strategy = Strategy.MODULAR_FAST,
) -> Iterator[TermRecord]:
    """Yield records for n_from..n_to inclusive, in ascending n."""
    _check_index(family, n_from)
    if n_from > n_to:
        raise ValueError(f"empty range {n_from}..{n_to}")
    for n in range(n_from, n_to + 1):
        yield term(family, n, strategy)


def gcd_via_factorial(n: int, x: int) -> int:
    """gcd(x, (n-1)!) with the factorial built mod x, never materialized."""
    if n < 3:
        raise IndexBelowDomain(f"defined for n >= 3, got {n}")
    return math.gcd(x, _backend.factorial_mod(n - 1, x))


@dataclass(frozen=True)
class FactorialReplacementReport:
    """Whether gcd(x, partner) == gcd(x, (n-1)!) across a main-sequence range."""

    n_from: int
    n_to: int
    checked: int
    counterexamples: tuple[tuple[int, int, int], ...]  # (n, d_partner, d_factorial)

    @property
    def clean(self):
        return not self.counterexamples


def verify_factorial_replacement(n_from: int = 3, n_to: int = 2000) -> FactorialReplacementReport:
    bad = []
    checked = 0
    for n in range(n_from, n_to + 1):
        x = numerator(MAIN, n)
        d_partner = math.gcd(x, gcd_partner_residue(MAIN, n, x))
        d_fact = gcd_via_factorial(n, x)
        checked += 1
        if d_partner != d_fact:
            bad.append((n, d_partner, d_fact))
    return FactorialReplacementReport(n_from, n_to, checked, tuple(bad))


@dataclass(frozen=True)
class StrategyEquivalenceReport:
    families: tuple[str, ...]
    n_to: int
    checked: int
    mismatches: tuple[dict, ...]

    @property
    def clean(self):
        return not self.mismatches


def verify_strategy_equivalence(specs, n_to: int) -> StrategyEquivalenceReport:
    """Recompute every term both ways and compare records field for field."""
    mismatches = []
    checked = 0
    for family in specs:
        for n in range(family.first_index, n_to + 1):
            exact = term(family, n, Strategy.EXACT_BIGINT)
            fast = term(family, n, Strategy.MODULAR_FAST)
            checked += 1
            if exact != fast:
                mismatches.append(
                    {"family": str(family), "n": n,
                     "exact": exact.as_dict(), "modular": fast.as_dict()}
                )
    return StrategyEquivalenceReport(
        tuple(str(f) for f in specs), n_to, checked, tuple(mismatches)
    )
