"""Brute-force enumeration oracles.

Everything here counts partitions or overpartitions directly, with no
generating-function machinery, so the results can sit on the other side of
an identity check.  An overpartition is a partition in which the final
(lowest) occurrence of each distinct part value may be overlined, so a
partition with d distinct values yields 2**d overpartitions.  The spread of
a partition is its largest part minus its smallest.

The count_* functions share one cached counting sweep per (statistic, t)
pair; :func:`iter_overpartitions` is a second, independent strategy that
materializes every overline choice and is used to cross-check the weighted
sweeps at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from . import kernels
from .series import QSeries

ORACLE_KINDS = ("pbar_t", "g_t", "p_t", "p_exact_t", "d")


def divisor_count(n: int) -> int:
    """Number of positive divisors of n.

    Raises:
        ValueError: if n < 1.
    """
    if n < 1:
        raise ValueError(f"divisor_count needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d < n:
        if n % d == 0:
            total += 2
        d += 1
    if d * d == n:
        total += 1
    return total


def _require_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"counting functions need n >= 1, got {n}")


def _require_t(t: int) -> None:
    if t < 0:
        raise ValueError(f"spread bound t must be >= 0, got {t}")


def _chunk(n: int) -> int:
    # Cache sweeps on rounded-up sizes so scans over n reuse one walk.
    return ((n + 31) // 32) * 32


@lru_cache(maxsize=None)
def _window_counts(t: int, n_hi: int, mode: int) -> Tuple[int, ...]:
    return tuple(kernels.window_diff_counts(n_hi, t, mode))


@lru_cache(maxsize=None)
def _total_counts(n_hi: int) -> Tuple[int, ...]:
    return tuple(kernels.all_partition_weighted_counts(n_hi))


def count_p_bounded_diff(n: int, t: int) -> int:
    """Partitions of n with spread at most t."""
    _require_n(n)
    _require_t(t)
    return _window_counts(t, _chunk(n), kernels.MODE_BOUNDED)[n]


def count_p_exact_diff(n: int, t: int) -> int:
    """Partitions of n with spread exactly t."""
    _require_n(n)
    _require_t(t)
    return _window_counts(t, _chunk(n), kernels.MODE_EXACT)[n]


def count_opbar_total(n: int) -> int:
    """All overpartitions of n."""
    _require_n(n)
    return _total_counts(_chunk(n))[n]


def count_opbar_bounded(n: int, t: int) -> int:
    """Overpartitions of n whose underlying partition has spread at most t."""
    _require_n(n)
    _require_t(t)
    return _window_counts(t, _chunk(n), kernels.MODE_PBAR)[n]


def count_g(n: int, t: int) -> int:
    """Overpartitions of n with spread at most t, except that when the
    spread is exactly t the largest part may not be overlined (half the
    overline choices survive)."""
    _require_n(n)
    _require_t(t)
    return _window_counts(t, _chunk(n), kernels.MODE_G)[n]


def over_qbinom_box_oracle(m: int, n: int) -> QSeries:
    """Overpartition q-binomial by direct enumeration of the m x n box.

    Walks every partition with at most n parts, each at most m, adding
    2**distinct at its size.  Exact polynomial, window [0, m*n + 1).
    """
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be >= 0")
    counts = kernels.box_weighted_counts(m, n)
    return QSeries._make(0, m * n + 1, counts)


def oracle_series(kind: str, t: Optional[int], n_max: int) -> QSeries:
    """Enumerated counts as a series: sum_{n=1}^{n_max} count(n) q^n.

    kind selects the statistic: "pbar_t" (count_opbar_bounded), "g_t"
    (count_g), "p_t" (count_p_bounded_diff), "p_exact_t"
    (count_p_exact_diff) or "d" (divisor_count; t is ignored).  The window
    is [1, n_max + 1).
    """
    if kind not in ORACLE_KINDS:
        raise ValueError(f"unknown oracle kind {kind!r}")
    _require_n(n_max)
    if kind == "d":
        counts = [divisor_count(n) for n in range(1, n_max + 1)]
    else:
        mode = {
            "pbar_t": kernels.MODE_PBAR,
            "g_t": kernels.MODE_G,
            "p_t": kernels.MODE_BOUNDED,
            "p_exact_t": kernels.MODE_EXACT,
        }[kind]
        if t is None:
            raise ValueError(f"oracle kind {kind!r} needs the parameter t")
        _require_t(t)
        counts = list(_window_counts(t, _chunk(n_max), mode)[1 : n_max + 1])
    return QSeries._make(1, n_max + 1, counts)


# -- independent flag-materializing enumeration ---------------------------------


@dataclass(frozen=True)
class PartitionInBox:
    """A partition as a non-increasing tuple of positive parts."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        prev = None
        for p in self.parts:
            if p < 1:
                raise ValueError("parts must be positive")
            if prev is not None and p > prev:
                raise ValueError("parts must be non-increasing")
            prev = p

    def spread(self) -> int:
        return self.parts[0] - self.parts[-1] if self.parts else 0


@dataclass(frozen=True)
class OverPartition:
    """A partition plus the set of part values that carry an overline."""

    partition: PartitionInBox
    overlined: frozenset

    def __post_init__(self):
        values = set(self.partition.parts)
        if not set(self.overlined) <= values:
            raise ValueError("overlined values must occur in the partition")


def iter_partitions(
    n: int, max_part: Optional[int] = None, min_part: int = 1
) -> Iterator[Tuple[int, ...]]:
    """All partitions of n with parts in [min_part, max_part], largest first."""
    if max_part is None or max_part > n:
        max_part = n

    def rec(remaining, cap, prefix):
        if remaining == 0:
            yield prefix
            return
        for v in range(min(cap, remaining), min_part - 1, -1):
            yield from rec(remaining - v, v, prefix + (v,))

    if n == 0:
        yield ()
    elif n >= 1 and min_part <= max_part:
        yield from rec(n, max_part, ())


def _subsets(values):
    values = sorted(values)
    for mask in range(1 << len(values)):
        yield frozenset(v for i, v in enumerate(values) if mask >> i & 1)


def iter_overpartitions(n: int) -> Iterator[OverPartition]:
    """Materialize every overpartition of n, one overline subset at a time.

    Exponential in the number of distinct parts; intended as a small-n
    cross-check of the weighted counting sweeps.
    """
    for parts in iter_partitions(n):
        p = PartitionInBox(parts)
        for ov in _subsets(set(parts)):
            yield OverPartition(p, ov)
