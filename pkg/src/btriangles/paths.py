"""Sums of triangle entries along straight lattice paths.

A path starts at a cell of the order-m triangle and repeatedly moves by
a fixed step: the row index changes by l and the column index by -c (a
column drop of c).  Summing the visited entries while they stay inside
the triangle yields the three families

* S: start (n, n), c > 0, l < 0 - walk down-left from the diagonal;
* Sbar: the diagonal-reflected complement 2*cell(n, n) - S;
* T: start (n, 0), c < 0, l < 0 - walk up-right from the left edge.

Every family stops at the last in-range cell, so each sum is finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangle import TriangleStore

__all__ = [
    "InvalidPathSpec",
    "PathSpec",
    "PathTrace",
    "trace",
    "sum_S",
    "sum_Sbar",
    "sum_T",
]

_FAMILIES = ("S", "Sbar", "T")


class InvalidPathSpec(ValueError):
    """Raised for step parameters outside a family's admissible range."""


@dataclass(frozen=True)
class PathSpec:
    """One path-sum instance: order, column drop c, row step l, family, n."""

    m: int
    c: int
    l: int
    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise InvalidPathSpec(
                f"family must be one of {_FAMILIES}, got {self.family!r}"
            )
        if self.m < 1:
            raise InvalidPathSpec(f"order must be >= 1, got {self.m}")
        if self.n < 0:
            raise InvalidPathSpec(f"n must be >= 0, got {self.n}")
        if self.family in ("S", "Sbar"):
            if self.c <= 0 or self.l >= 0:
                raise InvalidPathSpec(
                    f"S paths need c > 0 and l < 0, got c={self.c} l={self.l}"
                )
            if self.c + self.l < 0:
                # A drop steeper than the row step would carry the column
                # below 0 while the row is still nonnegative; every cell
                # on an admissible path satisfies 0 <= col <= row.
                raise InvalidPathSpec(
                    f"S paths need c + l >= 0, got c={self.c} l={self.l}"
                )
        else:
            if self.c >= 0 or self.l >= 0:
                raise InvalidPathSpec(
                    f"T paths need c < 0 and l < 0, got c={self.c} l={self.l}"
                )


@dataclass(frozen=True)
class PathTrace:
    """Cells visited by a path, in walk order, with their entries."""

    spec: PathSpec
    cells: tuple[tuple[int, int], ...]
    values: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.values)


def _steps(spec: PathSpec) -> int:
    # Number of steps k >= 1 that remain in range, from the stopping
    # condition of each family; k = 0 (the start cell) always counts.
    if spec.family == "T":
        return -spec.n // (spec.c + spec.l)
    return spec.n // spec.c


def _walk(spec: PathSpec, store: TriangleStore) -> PathTrace:
    if spec.family == "T":
        start_row, start_col = spec.n, 0
    else:
        start_row, start_col = spec.n, spec.n
    cells = []
    values = []
    for k in range(_steps(spec) + 1):
        row = start_row + k * spec.l
        col = start_col - k * spec.c
        cells.append((row, col))
        values.append(store.cell(spec.m, row, col))
    return PathTrace(spec, tuple(cells), tuple(values))


def trace(spec: PathSpec, store: TriangleStore | None = None) -> PathTrace:
    """List the cells a path visits together with the summed entries.

    For Sbar the cells are those of the underlying S walk; the reported
    values are unchanged (the complement applies to the total only).
    """
    return _walk(spec, store if store is not None else TriangleStore())


def sum_S(m: int, c: int, l: int, n: int, store: TriangleStore | None = None) -> int:
    """Down-left path sum from the diagonal cell (n, n)."""
    spec = PathSpec(m, c, l, "S", n)
    return _walk(spec, store if store is not None else TriangleStore()).total


def sum_Sbar(m: int, c: int, l: int, n: int, store: TriangleStore | None = None) -> int:
    """Complementary sum 2*cell(n, n) - S; counts the diagonal cell twice."""
    if store is None:
        store = TriangleStore()
    spec = PathSpec(m, c, l, "Sbar", n)
    return 2 * store.cell(m, n, n) - _walk(spec, store).total


def sum_T(m: int, c: int, l: int, n: int, store: TriangleStore | None = None) -> int:
    """Up-right path sum from the left-edge cell (n, 0)."""
    spec = PathSpec(m, c, l, "T", n)
    return _walk(spec, store if store is not None else TriangleStore()).total
