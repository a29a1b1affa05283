"""Exact binomial coefficients and their parity.

Two deliberately independent routes: exact values come from cached
Pascal rows, parity from the binary digit-domination rule (C(n, k) is
odd iff every bit of k is also set in n).  The suite cross-checks them.
"""

from __future__ import annotations

import threading

_rows: list[tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


def _pascal_row(n: int) -> tuple[int, ...]:
    if n >= len(_rows):
        with _rows_lock:
            while len(_rows) <= n:
                prev = _rows[-1]
                mid = tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1))
                _rows.append((1,) + mid + (1,))
    return _rows[n]


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binom requires nonnegative n")
    if k < 0 or k > n:
        return 0
    return _pascal_row(n)[k]


def binom_parity(n: int, k: int) -> int:
    """binom(n, k) mod 2 via digit domination, without the big integers."""
    if n < 0:
        raise ValueError("binom_parity requires nonnegative n")
    if k < 0 or k > n:
        return 0
    return 1 if (k & n) == k else 0
