#!/usr/bin/env python3
"""Regenerate the bundled b-file snapshots under src/btriangles/data/bfiles.

Each snapshot is produced here from the sequence's published definition
(linear recurrence or a direct binomial construction), deliberately not
by importing btriangles: the package's own generators are then checked
against these files by an independent route.  Headers record the exact
rule used so every file is reproducible from this script alone.
"""

from __future__ import annotations

import argparse
from math import comb
from pathlib import Path

DEFAULT_COUNT = 100
TRIANGLE_ROWS = 25  # rows 0..25 flatten to 351 terms


def linear(seeds: list[int], coeffs: list[int], count: int) -> list[int]:
    """a(n) = sum(coeffs[i] * a(n-1-i)); seeds give a(0)..a(len-1)."""
    values = list(seeds)
    while len(values) < count:
        values.append(
            sum(c * values[len(values) - 1 - i] for i, c in enumerate(coeffs))
        )
    return values[:count]


def shifted_fib(seeds: list[int], lag: int, count: int) -> list[int]:
    """a(n) = a(n-1) + a(n-lag)."""
    values = list(seeds)
    while len(values) < count:
        values.append(values[-1] + values[-lag])
    return values[:count]


def fib_list(count: int) -> list[int]:
    return shifted_fib([0, 1], 2, count)


def a027934(count: int) -> list[int]:
    f = fib_list(count + 2)
    return [(1 << n) - f[n + 1] for n in range(count)]


def a099568(count: int) -> list[int]:
    # 2^n plus a weighted sum of the lagged Fibonacci variant
    # g(n) = g(n-1) + g(n-3), g vanishing below 3 and g(3) = 1.
    g = [0, 0, 0, 1]
    while len(g) < count + 1:
        g.append(g[-1] + g[-3])
    return [
        (1 << n) + sum((1 << (n - k)) * g[k] for k in range(1, n + 1))
        for n in range(count)
    ]


def prefix_rows(order: int, rows: int) -> list[list[int]]:
    """Rows 0..rows of the iterated partial-sum triangle, from comb only."""
    out = []
    for n in range(rows + 1):
        row = [comb(n, q) for q in range(n + 1)]
        for _ in range(order - 1):
            acc = 0
            for i, v in enumerate(row):
                acc += v
                row[i] = acc
        out.append(row)
    return out


def flatten(rows: list[list[int]]) -> list[int]:
    return [v for row in rows for v in row]


def a138653(count: int) -> list[int]:
    # 2*B(n,n) - sum_k B(n-k, n-4k) over the order-2 partial-sum rows.
    rows = prefix_rows(2, count)
    return [
        2 * rows[n][n] - sum(rows[n - k][n - 4 * k] for k in range(n // 4 + 1))
        for n in range(count)
    ]


def a005251(count: int) -> list[int]:
    return linear([0, 1, 1], [2, -1, 1], count)


def a005314(count: int) -> list[int]:
    return linear([0, 1, 2], [2, -1, 1], count)


def build_all(count: int) -> dict[str, tuple[list[int], str]]:
    return {
        "A000045": (
            fib_list(count),
            "Fibonacci: a(n) = a(n-1) + a(n-2), a(0)=0, a(1)=1",
        ),
        "A000930": (
            shifted_fib([1, 1, 1], 3, count),
            "a(n) = a(n-1) + a(n-3), a(0)=a(1)=a(2)=1",
        ),
        "A003269": (
            shifted_fib([0, 1, 1, 1], 4, count),
            "a(n) = a(n-1) + a(n-4), a(0)=0, a(1)=a(2)=a(3)=1",
        ),
        "A003520": (
            shifted_fib([1, 1, 1, 1, 1], 5, count),
            "a(n) = a(n-1) + a(n-5), a(0)=..=a(4)=1",
        ),
        "A005251": (
            a005251(count),
            "a(n) = 2a(n-1) - a(n-2) + a(n-3), a(0)=0, a(1)=a(2)=1",
        ),
        "A005314": (
            a005314(count),
            "a(n) = 2a(n-1) - a(n-2) + a(n-3), a(0)=0, a(1)=1, a(2)=2",
        ),
        "A008949": (
            flatten(prefix_rows(2, TRIANGLE_ROWS)),
            f"partial sums of binomial rows, rows 0..{TRIANGLE_ROWS} "
            "read left to right",
        ),
        "A027934": (
            a027934(count),
            "a(n) = 2^n - Fibonacci(n+1)",
        ),
        "A099568": (
            a099568(count),
            "a(n) = 2^n + sum_{k=1..n} 2^(n-k) g(k), "
            "g(n) = g(n-1) + g(n-3), g(3)=1, g(n<3)=0",
        ),
        "A138653": (
            a138653(count),
            "2*B(n,n) - sum_{k<=n/4} B(n-k, n-4k) over order-2 "
            "partial-sum rows built from comb",
        ),
        "A193605": (
            flatten(prefix_rows(3, TRIANGLE_ROWS)),
            f"double partial sums of binomial rows, rows 0..{TRIANGLE_ROWS} "
            "read left to right",
        ),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--count", type=int, default=DEFAULT_COUNT, help="terms per sequence"
    )
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent
        / "src"
        / "btriangles"
        / "data"
        / "bfiles",
        help="output directory",
    )
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for oeis_id, (values, rule) in sorted(build_all(args.count).items()):
        lines = [
            f"# {oeis_id} snapshot generated by tools/make_bfile_snapshots.py",
            f"# rule: {rule}",
        ]
        lines.extend(f"{i} {v}" for i, v in enumerate(values))
        path = args.out / f"{oeis_id}.txt"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"wrote {path} ({len(values)} terms)")


if __name__ == "__main__":
    main()
