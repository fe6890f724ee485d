"""Fibonacci numbers, a telescoping reconstruction, and the diagonal sum.

The telescoping inversion is the workhorse behind most closed forms in
this package: if v_n = u_n - 2*u_{n-1}, then u_n can be rebuilt from u_0
and the differences as u_n = 2^n*u_0 + sum_{k=1}^{n} 2^{n-k} v_k.
"""

from __future__ import annotations

import threading
from typing import Sequence

from .exactnum import binomial

__all__ = ["fib", "telescope", "fib_diag"]

# Append-only cache seeded with F_0 = 0, F_1 = 1.  Reads are lock-free
# (indexing a list that only grows); extension is serialized.
_fib_cache: list[int] = [0, 1]
_fib_lock = threading.Lock()


def fib(n: int) -> int:
    """Fibonacci number F_n with F_0 = 0 and F_1 = 1."""
    if n < 0:
        raise ValueError(f"fib requires n >= 0, got {n}")
    if n >= len(_fib_cache):
        with _fib_lock:
            while len(_fib_cache) <= n:
                _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    return _fib_cache[n]


def telescope(u0: int, v: Sequence[int], n: int) -> int:
    """Rebuild u_n from u_0 and the differences v_k = u_k - 2*u_{k-1}.

    ``v`` supplies v_1 .. v_n in order (``v[k-1]`` is v_k), so it needs at
    least ``n`` entries.  Accepts signed differences and may return a
    signed value: several instantiations feed negated Fibonacci numbers.
    """
    if n < 0:
        raise ValueError(f"telescope requires n >= 0, got {n}")
    if len(v) < n:
        raise ValueError(f"telescope needs {n} differences, got {len(v)}")
    total = u0 * (1 << n)
    for k in range(1, n + 1):
        total += v[k - 1] * (1 << (n - k))
    return total


def fib_diag(n: int) -> int:
    """Shallow-diagonal binomial sum: sum_{k=0}^{floor(n/2)} C(n-k, k).

    Evaluates the sum directly; it equals F_{n+1}, which the test suite
    asserts against :func:`fib`.
    """
    if n < 0:
        raise ValueError(f"fib_diag requires n >= 0, got {n}")
    return sum(binomial(n - k, k) for k in range(n // 2 + 1))
