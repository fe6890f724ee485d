"""Exact scalar arithmetic used by every other module.

All values are Python ``int`` (arbitrary precision) or ``fractions.Fraction``
(always in lowest terms with positive denominator), so nothing here can lose
precision.  The type aliases ``Natural`` and ``Rational`` name those roles.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = ["Natural", "Rational", "binomial", "pow2"]

Natural = int
Rational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), total over all integer pairs.

    Returns 0 whenever (n, k) lies outside the Pascal region (k < 0,
    k > n, or n < 0).  The vanishing convention keeps every sum in this
    package well-defined without per-call guards, in particular the
    explicit generalized-Fibonacci expansion whose upper index drops
    below the lower one for large i.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def pow2(n: int) -> int:
    """2**n for n >= 0."""
    if n < 0:
        raise ValueError(f"pow2 requires n >= 0, got {n}")
    return 1 << n
