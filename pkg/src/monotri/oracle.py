"""Brute-force enumeration of monotone triangles and trapezoids.

A monotone triangle is a triangular integer array whose rows are strictly
increasing and whose entries weakly increase along both diagonals, i.e.
``a[i][j] <= a[i-1][j] <= a[i][j+1]``.  Counting proceeds row by row upward
from the bottom, so these counts are independent of any polynomial formula.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

DEFAULT_MAX_N = 7
MAX_N_ENV = "MONOTRI_ENUM_MAX_N"


class EnumerationTooLarge(ValueError):
    pass


def enumeration_limit() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None


def check_size(n: int, force: bool = False) -> None:
    limit = enumeration_limit()
    if n > limit and not force:
        raise EnumerationTooLarge(
            f"refusing to enumerate with n={n} > {limit}; pass force=True "
            f"(--force) or raise {MAX_N_ENV}")


def check_row(row: Sequence[int]) -> Tuple[int, ...]:
    row = tuple(int(k) for k in row)
    if not row:
        raise ValueError("bottom row must be nonempty")
    if any(a >= b for a, b in zip(row, row[1:])):
        raise ValueError(
            f"bottom row {row} is not strictly increasing; enumeration only "
            "counts actual monotone triangles (use a polynomial method for other rows)")
    return row


def previous_rows(row: Tuple[int, ...], strict_se: bool = False) -> Iterator[Tuple[int, ...]]:
    """Rows that may sit directly above ``row``.

    ``k_j <= l_j <= k_{j+1}`` with ``l`` strictly increasing; ``strict_se``
    additionally requires ``l_j < k_{j+1}``.
    """
    ranges = [range(a, b if strict_se else b + 1) for a, b in zip(row, row[1:])]
    for cand in itertools.product(*ranges):
        if all(x < y for x, y in zip(cand, cand[1:])):
            yield cand


@lru_cache(maxsize=None)
def _count(row: Tuple[int, ...], strict_se: bool) -> int:
    if len(row) == 1:
        return 1
    return sum(_count(prev, strict_se) for prev in previous_rows(row, strict_se))


def count_monotone_triangles(row: Sequence[int], force: bool = False) -> int:
    row = check_row(row)
    check_size(len(row), force)
    return _count(row, False)


def count_strict_se_triangles(row: Sequence[int], force: bool = False) -> int:
    """Monotone triangles that strictly increase along every southeast diagonal."""
    row = check_row(row)
    check_size(len(row), force)
    return _count(row, True)


def trapezoid_top_counts(n: int, r: int, force: bool = False) -> Counter:
    """Counts of (r, n) monotone trapezoids with bottom row ``(1..n)``, keyed by top row."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    check_size(n, force)
    level = Counter({tuple(range(1, n + 1)): 1})
    for _ in range(r - 1):
        nxt: Counter = Counter()
        for row, c in level.items():
            for prev in previous_rows(row):
                nxt[prev] += c
        level = nxt
    return level


def count_trapezoids(top: Sequence[int], n: int, force: bool = False) -> int:
    top = check_row(top)
    if len(top) > n:
        raise ValueError(f"top row {top} is longer than the bottom row (1..{n})")
    if top[0] < 1 or top[-1] > n:
        raise ValueError(f"top row {top} has entries outside [1, {n}]")
    r = n - len(top) + 1
    return trapezoid_top_counts(n, r, force)[top]


def punctured_row(n: int, k: int) -> Tuple[int, ...]:
    if not 1 <= k <= n:
        raise ValueError(f"column k={k} outside 1..{n}")
    return tuple(j for j in range(1, n + 1) if j != k)


def refined_bottom_count(n: int, k: int, force: bool = False) -> int:
    """Monotone triangles with bottom row ``(1..n)`` minus the entry ``k``.

    This is the number of n x n ASMs whose bottom-row 1 sits in column k.
    """
    if n == 1:
        punctured_row(n, k)
        return 1
    return count_monotone_triangles(punctured_row(n, k), force)
