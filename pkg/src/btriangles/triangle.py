"""Iterated partial-sum triangles with memoized rows.

Order 1 is Pascal's triangle.  Each higher order takes row-wise partial
sums of the order below: entry (n, k) of order m+1 is the sum of entries
(n, 0..k) of order m.  Interior cells of every order satisfy the Pascal
rule cell(n, k) = cell(n-1, k) + cell(n-1, k-1), which is how rows are
actually built; the nested-sum definition survives only as the
independent brute-force oracle.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

__all__ = ["TriangleStore", "cell_bruteforce"]


class TriangleStore:
    """Lazy, memoized table of triangle rows keyed by (order, row).

    Rows are immutable tuples and are published with a single dict
    assignment after they are fully built, so concurrent readers never
    observe a partial row.  Two threads may race to build the same row;
    they produce identical tuples and the duplicated work is harmless.
    Nothing is ever evicted: verification sweeps revisit rows heavily.
    """

    def __init__(self) -> None:
        self._rows: dict[tuple[int, int], tuple[int, ...]] = {}

    def row(self, m: int, n: int) -> tuple[int, ...]:
        """Row n of the order-m triangle: entries for columns 0..n."""
        if m < 1:
            raise ValueError(f"triangle order must be >= 1, got {m}")
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        got = self._rows.get((m, n))
        if got is None:
            got = self._build_row(m, n)
            self._rows[m, n] = got
        return got

    def cell(self, m: int, n: int, k: int) -> int:
        """Entry (n, k) of the order-m triangle.

        Columns outside 0..n read as 0 (vanishing convention), which is
        what the path-sum code relies on; addressability proper is the
        0 <= k <= n condition.
        """
        if k < 0 or k > n:
            return 0
        return self.row(m, n)[k]

    def _build_row(self, m: int, n: int) -> tuple[int, ...]:
        # Iterative over n so deep rows do not recurse; each missing
        # ancestor row is one Pascal pass over its predecessor.
        start = n
        while start > 0 and (m, start - 1) not in self._rows:
            start -= 1
        for r in range(start, n + 1):
            if (m, r) in self._rows:
                continue
            if r == 0:
                row = (1,)
            else:
                prev = self._rows[m, r - 1]
                mid = [1]
                mid.extend(prev[k] + prev[k - 1] for k in range(1, r))
                mid.append(prev[r - 1] if m == 1 else sum(self.row(m - 1, r)))
                row = tuple(mid)
            self._rows[m, r] = row
        return self._rows[m, n]


@lru_cache(maxsize=None)
def _bruteforce_row(m: int, n: int) -> tuple[int, ...]:
    # Binomial row followed by m-1 in-place prefix-sum passes; no Pascal
    # recurrence anywhere, so this is a genuinely independent route.
    row = [comb(n, q) for q in range(n + 1)]
    for _ in range(m - 1):
        acc = 0
        for i, value in enumerate(row):
            acc += value
            row[i] = acc
    return tuple(row)


def cell_bruteforce(m: int, n: int, k: int) -> int:
    """Entry (n, k) of the order-m triangle by direct nested summation.

    Oracle counterpart of :meth:`TriangleStore.cell`; rejects columns
    outside 0..n instead of returning 0.
    """
    if m < 1:
        raise ValueError(f"triangle order must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"row index must be >= 0, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"column {k} out of range for row {n}")
    return _bruteforce_row(m, n)[k]
