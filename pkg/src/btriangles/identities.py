"""Registry pairing each closed-form identity with a brute-force oracle.

Every record names one verifiable statement about the triangles: a
closed form built from Fibonacci numbers, powers of two, and the
derived polynomials on one side, and an oracle that recomputes the same
quantity by direct binomial summation on the other.  The two sides
share no code, so agreement over a sweep is genuine evidence.

:func:`verify` sweeps one record over an index range and reports every
mismatch.  Multi-parameter families (a range of orders m or drops c)
are single records whose sides return tuples, compared elementwise.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import binomial, pow2
from .fibonacci import fib
from .gfib import lambda_explicit
from .paths import sum_Sbar
from .polyderive import tm_closed
from .triangle import TriangleStore, _bruteforce_row

__all__ = [
    "IdentityRecord",
    "VerifyReport",
    "REGISTRY",
    "verify",
    "sbar31",
    "sbar41",
    "sbar31diff3",
]

Side = Callable[[int], "int | tuple[int, ...]"]


@dataclass(frozen=True)
class IdentityRecord:
    """One identity: closed form vs oracle, valid for n >= valid_from."""

    name: str
    closed_form: Side
    oracle: Side
    valid_from: int
    description: str


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of sweeping one identity over [start, stop]."""

    name: str
    start: int
    stop: int
    failures: tuple[tuple[int, object, object], ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.ok:
            return f"{self.name} n=[{self.start}..{self.stop}] OK"
        n, closed, oracle = self.failures[0]
        return f"{self.name} FAIL at n={n}: closed={closed} oracle={oracle}"


# Brute path sums.  Everything below reaches the triangle only through
# _bruteforce_row (binomial row + prefix passes), never through the
# memoized Pascal-recurrence store the closed-form side of the package
# is built on.


def _brute_S(m: int, c: int, l: int, n: int) -> int:
    return sum(
        _bruteforce_row(m, n + k * l)[n - k * c] for k in range(n // c + 1)
    )


def _brute_Sbar(m: int, c: int, l: int, n: int) -> int:
    return 2 * _bruteforce_row(m, n)[n] - _brute_S(m, c, l, n)


def _brute_T(m: int, n: int) -> int:
    # Steps (-1, -1) from (n, 0): cells (n - k, k) while k <= n - k.
    return sum(_bruteforce_row(m, n - k)[k] for k in range(n // 2 + 1))


def _as_int(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer value {value} in {context}")
    return int(value)


# Closed forms with rational halves; exact throughout, asserted integral.


def _rest3_closed(n: int) -> int:
    p = (n + 1) // 2
    sign = -1 if n % 2 else 1
    inner = Fraction(p, 2) + Fraction(7, 2) + Fraction(sign, 2)
    return _as_int(fib(n + 5) - pow2(p) * inner, "resT3")


def _t4_closed(n: int) -> int:
    p = (n + 1) // 2
    sign = -1 if n % 2 else 1
    q = Fraction(p * p, 8) + Fraction(17 * p, 8) + 10
    r = Fraction(p, 4) + 2
    return _as_int(fib(n + 7) - pow2(p) * (q + sign * r), "T4closed")


def _t5_closed(n: int) -> int:
    p = (n + 1) // 2
    sign = -1 if n % 2 else 1
    q = Fraction(p**3, 48) + Fraction(5 * p * p, 8) + Fraction(317 * p, 48) + 27
    r = Fraction(p * p, 16) + Fraction(19 * p, 16) + 6
    return _as_int(fib(n + 9) - pow2(p) * (q + sign * r), "T5closed")


def _corollary1_closed(n: int) -> tuple[int, ...]:
    return tuple(
        pow2(n) + sum(pow2(n - k) * lambda_explicit(c, k) for k in range(1, n + 1))
        for c in range(2, 9)
    )


def _corollary1_oracle(n: int) -> tuple[int, ...]:
    return tuple(
        sum(
            _bruteforce_row(2, n - (c - 1) * k)[n - k * c]
            for k in range(n // c + 1)
        )
        for c in range(2, 9)
    )


_T_ORDERS = range(2, 7)
_TM_ORDERS = range(1, 11)


def _record(
    name: str, closed: Side, oracle: Side, valid_from: int, description: str
) -> IdentityRecord:
    return IdentityRecord(name, closed, oracle, valid_from, description)


REGISTRY: dict[str, IdentityRecord] = {
    rec.name: rec
    for rec in [
        _record(
            "theorem1",
            lambda n: pow2(n + 1) - fib(n + 2),
            lambda n: sum(
                _bruteforce_row(2, n - k)[n - 2 * k] for k in range(n // 2 + 1)
            ),
            0,
            "order-2 diagonal path sum S_n(2,-1) = 2^(n+1) - F_(n+2)",
        ),
        _record(
            "S2diff",
            lambda n: fib(n - 1),
            lambda n: _brute_S(2, 2, -1, n) - 2 * _brute_S(2, 2, -1, n - 1),
            1,
            "difference of consecutive order-2 path sums is Fibonacci",
        ),
        _record(
            "relB2diff",
            lambda n: tuple(binomial(n - 1, q) for q in range(1, n + 1)),
            lambda n: tuple(
                _bruteforce_row(2, n)[q] - 2 * _bruteforce_row(2, n - 1)[q - 1]
                for q in range(1, n + 1)
            ),
            1,
            "cell minus twice its upper-left neighbour is binomial",
        ),
        _record(
            "corollary1",
            _corollary1_closed,
            _corollary1_oracle,
            0,
            "path-sum reconstruction from the explicit lambda expansion, c in [2,8]",
        ),
        _record(
            "T2even",
            lambda p: _brute_T(2, 2 * p - 1) + fib(2 * p + 1),
            lambda p: _brute_T(2, 2 * p),
            1,
            "even-index order-2 T recurrence with Fibonacci increment",
        ),
        _record(
            "T2odd",
            lambda p: _brute_T(2, 2 * p) + _brute_T(2, 2 * p - 1),
            lambda p: _brute_T(2, 2 * p + 1),
            1,
            "odd-index order-2 T recurrence",
        ),
        _record(
            "resT2",
            lambda n: fib(n + 3) - pow2((n + 1) // 2),
            lambda n: _brute_T(2, n),
            0,
            "order-2 T path sum closed form",
        ),
        _record(
            "rel8",
            lambda n: fib(n),
            lambda n: _brute_Sbar(3, 2, -1, n) - 2 * _brute_Sbar(3, 2, -1, n - 1),
            1,
            "difference of consecutive order-3 complementary sums is Fibonacci",
        ),
        _record(
            "S3barClosed",
            lambda n: 3 * pow2(n) - fib(n + 3),
            lambda n: _brute_Sbar(3, 2, -1, n),
            0,
            "order-3 complementary path sum closed form",
        ),
        _record(
            "theoremS3",
            lambda n: fib(n + 3) + (n - 1) * pow2(n),
            lambda n: sum(
                _bruteforce_row(3, n - k)[n - 2 * k] for k in range(n // 2 + 1)
            ),
            0,
            "order-3 diagonal path sum S_n(2,-1) closed form",
        ),
        _record(
            "TmOdd",
            lambda p: tuple(
                _brute_T(m, 2 * p) + _brute_T(m, 2 * p - 1) for m in _T_ORDERS
            ),
            lambda p: tuple(_brute_T(m, 2 * p + 1) for m in _T_ORDERS),
            1,
            "odd-index T recurrence, orders 2..6",
        ),
        _record(
            "TmEven",
            lambda p: tuple(
                _brute_T(m, 2 * p - 1) + _brute_T(m - 1, 2 * p) for m in _T_ORDERS
            ),
            lambda p: tuple(_brute_T(m, 2 * p) for m in _T_ORDERS),
            1,
            "even-index T recurrence dropping one order, orders 2..6",
        ),
        _record(
            "resT3",
            _rest3_closed,
            lambda n: _brute_T(3, n),
            0,
            "order-3 T path sum closed form with rational halves",
        ),
        _record(
            "T4closed",
            _t4_closed,
            lambda n: _brute_T(4, n),
            0,
            "order-4 T path sum closed form, fixed printed coefficients",
        ),
        _record(
            "T5closed",
            _t5_closed,
            lambda n: _brute_T(5, n),
            0,
            "order-5 T path sum closed form, fixed printed coefficients",
        ),
        _record(
            "theoremTm",
            lambda n: tuple(tm_closed(m, n) for m in _TM_ORDERS),
            lambda n: tuple(_brute_T(m, n) for m in _TM_ORDERS),
            0,
            "derived polynomial closed form for T path sums, orders 1..10",
        ),
    ]
}


def verify(
    name: str, n_max: int, store: TriangleStore | None = None
) -> VerifyReport:
    """Sweep one registered identity over n in [valid_from, n_max].

    The ``store`` argument is accepted so callers can share a memoized
    triangle across sweeps; the built-in records compute their oracle
    sides from cached binomial rows and do not consult it.
    """
    try:
        rec = REGISTRY[name]
    except KeyError:
        raise KeyError(
            f"unknown identity {name!r}; known: {', '.join(sorted(REGISTRY))}"
        ) from None
    if n_max < rec.valid_from:
        raise ValueError(
            f"{name} needs n_max >= {rec.valid_from}, got {n_max}"
        )
    started = time.perf_counter()
    failures = []
    for n in range(rec.valid_from, n_max + 1):
        closed = rec.closed_form(n)
        oracle = rec.oracle(n)
        if closed != oracle:
            failures.append((n, closed, oracle))
    elapsed = time.perf_counter() - started
    return VerifyReport(name, rec.valid_from, n_max, tuple(failures), elapsed)


# Sequence generators without closed forms.  Their only verification is
# membership in a known integer sequence, handled by the oeis module,
# so they live outside REGISTRY.

_shared_store = TriangleStore()


def sbar31(n: int, store: TriangleStore | None = None) -> int:
    """Complementary order-2 path sum along (3, -1)."""
    return sum_Sbar(2, 3, -1, n, store if store is not None else _shared_store)


def sbar41(n: int, store: TriangleStore | None = None) -> int:
    """Complementary order-2 path sum along (4, -1)."""
    return sum_Sbar(2, 4, -1, n, store if store is not None else _shared_store)


def sbar31diff3(n: int, store: TriangleStore | None = None) -> int:
    """Difference sequence of the order-3 complementary sums along (3, -1)."""
    if n < 1:
        raise ValueError(f"difference sequence starts at n = 1, got {n}")
    if store is None:
        store = _shared_store
    return sum_Sbar(3, 3, -1, n, store) - 2 * sum_Sbar(3, 3, -1, n - 1, store)
