"""Generalized Fibonacci sequences attached to second-order path sums.

For a column drop c >= 2, the difference sequence

    lambda_n(c) = S2_n(c, 1 - c) - 2 * S2_{n-1}(c, 1 - c)

(with S2 the order-2 path sum along steps (c, 1 - c)) vanishes for
n < c, equals 1 at n = c, and afterwards obeys the delayed recurrence
lambda_n = lambda_{n-1} + lambda_{n-c}.  c = 2 recovers the Fibonacci
numbers: lambda_n(2) = F_{n-1}.

Three independent routes to the same values live here: the defining
difference of path sums, the recurrence, and an explicit binomial sum.
Inverting the difference by telescoping rebuilds the path sum itself.
"""

from __future__ import annotations

import threading

from .exactnum import binomial
from .fibonacci import telescope
from .paths import sum_S
from .triangle import TriangleStore

__all__ = ["lambda_diff", "lambda_rec", "lambda_explicit", "s2_reconstruct"]


def _check_args(c: int, n: int) -> None:
    if c < 2:
        raise ValueError(f"column drop must be >= 2, got {c}")
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")


def lambda_diff(c: int, n: int, store: TriangleStore | None = None) -> int:
    """lambda_n(c) from its definition as a difference of path sums."""
    _check_args(c, n)
    if store is None:
        store = TriangleStore()
    if n == 0:
        return 0
    return sum_S(2, c, 1 - c, n, store) - 2 * sum_S(2, c, 1 - c, n - 1, store)


# Per-c value lists, extended under a single lock; reads are lock-free.
_rec_cache: dict[int, list[int]] = {}
_rec_lock = threading.Lock()


def lambda_rec(c: int, n: int) -> int:
    """lambda_n(c) from the recurrence lambda_n = lambda_{n-1} + lambda_{n-c}."""
    _check_args(c, n)
    values = _rec_cache.get(c)
    if values is None or len(values) <= n:
        with _rec_lock:
            values = _rec_cache.setdefault(c, [0] * c + [1])
            while len(values) <= n:
                i = len(values)
                values.append(values[i - 1] + values[i - c])
    return values[n]


def lambda_explicit(c: int, n: int) -> int:
    """lambda_n(c) as the binomial sum over i of C(n - c + i*(1 - c), i).

    The upper binomial index decreases with i and the terms vanish once
    it drops below i, so the sum over 0 <= i <= (n - c) // (c - 1) is
    exact without an explicit in-range test.
    """
    _check_args(c, n)
    if n < c:
        return 0
    return sum(
        binomial(n - c + i * (1 - c), i) for i in range((n - c) // (c - 1) + 1)
    )


def s2_reconstruct(c: int, n: int) -> int:
    """Rebuild S2_n(c, 1 - c) as 2^n + sum_k 2^(n-k) lambda_k(c).

    Telescopes the defining difference back up from S2_0 = 1; the test
    suite checks the result against the direct path sum.
    """
    _check_args(c, n)
    return telescope(1, [lambda_rec(c, k) for k in range(1, n + 1)], n)
