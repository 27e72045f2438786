"""Compositions and partitions.

Both are plain tuples of ints.  A composition may contain zero or negative
parts; a partition is weakly decreasing with positive parts.  Trailing zeros
are significant only positionally: use :func:`canonical` (or
:func:`same_composition`) at equality boundaries.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence

from .exact import ONE_POLY, TPoly, one_minus_t_power

Composition = tuple
Partition = tuple


def canonical(comp: Sequence[int]) -> tuple[int, ...]:
    """Strip trailing zeros."""
    comp = tuple(comp)
    n = len(comp)
    while n and comp[n - 1] == 0:
        n -= 1
    return comp[:n]


def same_composition(a: Sequence[int], b: Sequence[int]) -> bool:
    return canonical(a) == canonical(b)


def is_partition(lam: Sequence[int]) -> bool:
    lam = canonical(lam)
    return all(p > 0 for p in lam) and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def as_partition(lam: Sequence[int]) -> Partition:
    lam = canonical(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


def sort_partition(parts: Sequence[int]) -> Partition:
    """Sort nonnegative parts decreasingly and drop zeros."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p)


def positive_weight(lam: Sequence[int]) -> int:
    return sum(p for p in lam if p > 0)


@lru_cache(maxsize=None)
def multiplicities(lam: Partition) -> tuple[tuple[int, int], ...]:
    """Sorted (part, multiplicity) pairs."""
    return tuple(sorted(Counter(p for p in lam if p).items()))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def epsilon(lam: Sequence[int]) -> int:
    """Sum over columns of C(column length, 2)."""
    return sum(comb(c, 2) for c in conjugate(lam))


def c_poly(lam: Sequence[int]) -> TPoly:
    """Norm polynomial: product over multiplicities k of (1-t)(1-t^2)...(1-t^k)."""
    out = ONE_POLY
    for _, k in multiplicities(as_partition(lam)):
        for j in range(1, k + 1):
            out = out * one_minus_t_power(j)
    return out


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type ``lam``."""
    out = 1
    for part, k in multiplicities(lam):
        out *= part ** k * factorial(k)
    return out


def prepend(n: int, lam: Sequence[int]) -> Composition:
    return (n,) + tuple(lam)


def raising(lam: Sequence[int], i: int, j: int) -> Composition:
    """Apply R_ij (1-based, i < j): raise part i and lower part j by one."""
    lam = list(lam)
    if not 1 <= i < j <= len(lam):
        raise IndexError(f"raising operator R_{i}{j} out of range for length {len(lam)}")
    lam[i - 1] += 1
    lam[j - 1] -= 1
    return tuple(lam)


def _partitions(n: int, maxpart: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


def strict_partitions(n: int) -> list[Partition]:
    return [lam for lam in enumerate_partitions(n) if len(set(lam)) == len(lam)]


def is_strict(lam: Sequence[int]) -> bool:
    lam = canonical(lam)
    return len(set(lam)) == len(lam)


def partwise_sum(a: Sequence[int], b: Sequence[int]) -> Partition:
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return canonical(tuple(x + y for x, y in zip(a, b)))


def column(n: int) -> Partition:
    """The column partition (1^n)."""
    return (1,) * n
