"""Finiteness estimate for prime v-palindromes under a Cramer-style model.

Assume the probability that n and n+2 are both prime is at most
C / log(n)**2 (natural log; the constant chain below fixes that reading).
The candidate at index n is the anchor pair near 5*10**n, so the expected
number of prime v-palindromes is bounded by a constant multiple of
sum 1/n**2, which converges: only finitely many are expected.
"""

import math
from dataclasses import dataclass

from .errors import DomainError

DEFAULT_C = 1.0

# Below this index the anchor value is small enough to take an exact bignum
# log; above it the correction term is far below double precision.
_EXACT_LOG_MAX = 64

_LN10 = math.log(10.0)
_LN5 = math.log(5.0)


class KahanSum:
    """Compensated accumulator; add() in ascending term order."""

    __slots__ = ("total", "_comp")

    def __init__(self):
        self.total = 0.0
        self._comp = 0.0

    def add(self, x: float) -> None:
        y = x - self._comp
        t = self.total + y
        self._comp = (t - self.total) - y
        self.total = t


@dataclass(frozen=True)
class HeuristicReport:
    """Per-index twin probabilities with their envelope and tail bound."""

    C: float
    n_start: int
    N: int
    terms: list[float]
    partial_sum: float
    envelope_sum: float
    tail_bound: float


def _log_anchor(n: int) -> float:
    """Natural log of 5*10**n - 3."""
    if n <= _EXACT_LOG_MAX:
        return math.log(5 * 10**n - 3)
    return n * _LN10 + _LN5


def pair_probability(n: int, C: float = DEFAULT_C) -> float:
    """Model bound C / log(5*10**n - 3)**2 on both anchors being prime."""
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    if C <= 0:
        raise DomainError(f"model constant must be positive, got {C}")
    lg = _log_anchor(n)
    return C / (lg * lg)


def envelope_term(n: int, C: float = DEFAULT_C) -> float:
    """The dominating term 100*C/n**2."""
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    if C <= 0:
        raise DomainError(f"model constant must be positive, got {C}")
    return 100.0 * C / (n * n)


def expected_count(n_start: int, N: int, C: float = DEFAULT_C) -> HeuristicReport:
    """Partial sums of the expected-count series over [n_start, N].

    Terms are accumulated in ascending n with compensated summation;
    tail_bound = 100*C/N dominates the envelope series beyond N.
    """
    if n_start < 1:
        raise DomainError(f"start index must be >= 1, got {n_start}")
    if N < n_start:
        raise DomainError(f"empty index range [{n_start}, {N}]")
    if C <= 0:
        raise DomainError(f"model constant must be positive, got {C}")
    terms = []
    partial = KahanSum()
    envelope = KahanSum()
    for n in range(n_start, N + 1):
        t = pair_probability(n, C)
        terms.append(t)
        partial.add(t)
        envelope.add(envelope_term(n, C))
    return HeuristicReport(
        C=C,
        n_start=n_start,
        N=N,
        terms=terms,
        partial_sum=partial.total,
        envelope_sum=envelope.total,
        tail_bound=100.0 * C / N,
    )
