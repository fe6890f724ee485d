"""Exact rational polynomials and the order-m closed form for T paths.

The up-right path sum T_n of the order-m triangle along steps (-1, -1)
satisfies

    T_n = F_{n+2m-1} - 2^p * (Q(p) + (-1)^n * R(p)),   p = floor((n+1)/2),

where Q and R are rational polynomials of degree (m-2)^+ and (m-3)^+.
:func:`derive_QR` builds them by induction on the order:

    Q' = (A + F_{2m+2} - 1 + Q + R) / 2,    R' = (Q + R) / 2,

with A the discrete sum of Q + R and base case Q = R = 0 at order 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import Rational
from .fibonacci import fib

__all__ = [
    "RatPolynomial",
    "QRPair",
    "poly_eval",
    "discrete_sum",
    "derive_QR",
    "tm_closed",
]


@dataclass(frozen=True)
class RatPolynomial:
    """Dense univariate polynomial over the rationals.

    ``coeffs[k]`` is the coefficient of X^k; trailing zeros are stripped
    on construction, so the zero polynomial has no coefficients at all.
    ``degree`` reports 0 for the zero polynomial (callers that care use
    ``is_zero`` to tell it apart from a nonzero constant).
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for k, c in enumerate(b):
            merged[k] += c
        return RatPolynomial(tuple(merged))

    def scale(self, factor: Rational | int) -> "RatPolynomial":
        return RatPolynomial(tuple(c * factor for c in self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "X" if k == 1 else f"X^{k}"
                body = var if abs(c) == 1 else f"{abs(c)} {var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


_ZERO = RatPolynomial(())


@dataclass(frozen=True)
class QRPair:
    """The polynomial pair attached to one triangle order."""

    m: int
    Q: RatPolynomial
    R: RatPolynomial


def poly_eval(P: RatPolynomial, x: int) -> Fraction:
    """Evaluate P at x by Horner's rule, exactly."""
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def _interpolate(points: list[tuple[int, Fraction]]) -> RatPolynomial:
    # Lagrange form accumulated coefficient-wise; exact over Fraction.
    result = _ZERO
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # basis *= (X - xj)
            shifted = [Fraction(0)] + basis
            basis = [s - xj * b for s, b in zip(shifted, basis + [Fraction(0)])]
            denom *= xi - xj
        result = result + RatPolynomial(tuple(basis)).scale(yi / denom)
    return result


def discrete_sum(P: RatPolynomial) -> RatPolynomial:
    """The polynomial S with S(x) = sum_{k=1}^{x-1} P(k) for integers x >= 1.

    S has degree deg(P) + 1 and is pinned down by interpolation: the
    defining sum is evaluated at enough consecutive integers to
    determine a polynomial of that degree, then interpolated exactly.
    """
    if P.is_zero:
        return _ZERO
    npoints = P.degree + 3
    points: list[tuple[int, Fraction]] = []
    acc = Fraction(0)
    for x in range(1, npoints + 1):
        points.append((x, acc))
        acc += poly_eval(P, x)
    return _interpolate(points)


@lru_cache(maxsize=None)
def derive_QR(m: int) -> QRPair:
    """Polynomial pair (Q, R) for the order-m T-path closed form."""
    if m < 1:
        raise ValueError(f"order must be >= 1, got {m}")
    if m == 1:
        return QRPair(1, _ZERO, _ZERO)
    prev = derive_QR(m - 1)
    qr = prev.Q + prev.R
    a = discrete_sum(qr)
    const = RatPolynomial((Fraction(fib(2 * m) - 1),))
    q = (a + const + qr).scale(Fraction(1, 2))
    r = qr.scale(Fraction(1, 2))
    return QRPair(m, q, r)


def tm_closed(m: int, n: int) -> int:
    """T-path sum of order m at n via the Fibonacci-polynomial closed form.

    All arithmetic is rational; the result is asserted integral before
    conversion, so a derivation bug cannot round its way to a wrong
    integer.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    pair = derive_QR(m)
    p = (n + 1) // 2
    sign = -1 if n % 2 else 1
    value = fib(n + 2 * m - 1) - (1 << p) * (
        poly_eval(pair.Q, p) + sign * poly_eval(pair.R, p)
    )
    if value.denominator != 1:
        raise ArithmeticError(
            f"closed form produced non-integer {value} at m={m}, n={n}"
        )
    return int(value)
