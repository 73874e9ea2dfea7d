"""Partitions and r-colored multipartitions.

A partition is a weakly decreasing tuple of positive ints; a multipartition
is a tuple of r partitions.  Everything here is plain tuples so values hash
and compare cheaply.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple
MultiPartition = tuple


def make_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts if x)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts}")
    if any(p[j] < p[j + 1] for j in range(len(p) - 1)):
        p = tuple(sorted(p, reverse=True))
    return p


def make_multipartition(comps: Sequence[Sequence[int]], r: int | None = None) -> MultiPartition:
    mp = tuple(make_partition(c) for c in comps)
    if r is not None and len(mp) != r:
        raise ValueError(f"expected {r} components, got {len(mp)}")
    return mp


def size(lam: Partition) -> int:
    return sum(lam)


def mp_size(lam: MultiPartition) -> int:
    return sum(sum(c) for c in lam)


def length(lam: MultiPartition) -> int:
    return sum(len(c) for c in lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """(row, column) pairs, 1-based."""
    for j, part in enumerate(lam, start=1):
        for k in range(1, part + 1):
            yield j, k


def hook_product(lam: Partition) -> int:
    conj = conjugate(lam)
    return prod(lam[j - 1] - k + conj[k - 1] - j + 1 for j, k in cells(lam))


def mp_hook_product(lam: MultiPartition) -> int:
    return prod(hook_product(c) for c in lam)


def contents(lam: Partition) -> list[int]:
    return [k - j for j, k in cells(lam)]


def exponent_form(lam: Partition) -> dict[int, int]:
    """Multiplicities m_i, so lam = 1^{m_1} 2^{m_2} ..."""
    return dict(sorted(Counter(lam).items()))


def z_mu(lam: Partition) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def centralizer_order(lam: MultiPartition) -> int:
    r = len(lam)
    return r ** length(lam) * prod(z_mu(c) for c in lam)


def degree(lam: MultiPartition) -> int:
    return mp_size(lam) - len(lam[0])


def modified_type(lam: MultiPartition) -> MultiPartition:
    return (tuple(x - 1 for x in lam[0] if x > 1),) + tuple(lam[1:])


def dual(lam: MultiPartition) -> MultiPartition:
    """Component i moves to -i mod r (the class of inverse elements)."""
    r = len(lam)
    return tuple(lam[(-i) % r] for i in range(r))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, largest first lexicographically."""
    if n == 0:
        return ((),)
    max_part = n if max_part is None else min(max_part, n)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _component_key(p: Partition):
    return (-sum(p), p)


def mp_key(lam: MultiPartition):
    """Canonical order: component by component, larger size first, then
    ascending lexicographic parts (so (1^n) precedes (n))."""
    return tuple(_component_key(c) for c in lam)


@lru_cache(maxsize=None)
def enumerate_multipartitions(n: int, r: int) -> tuple[MultiPartition, ...]:
    if r < 1 or n < 0:
        raise ValueError("need n >= 0 and r >= 1")
    out = []
    for sizes in compositions(n, r):
        for comps in product(*(partitions(s) for s in sizes)):
            out.append(tuple(comps))
    out.sort(key=mp_key)
    return tuple(out)


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def identity_type(n: int, r: int) -> MultiPartition:
    return ((1,) * n,) + ((),) * (r - 1)


def count_multipartitions(n: int, r: int) -> int:
    """Coefficient of q^n in prod_k (1 - q^k)^{-r}, from the series itself."""
    # p_r(n) via the recurrence n a_n = sum_k r sigma(k) a_{n-k}
    a = [Fraction(1)] + [Fraction(0)] * n
    sigma = [0] + [sum(d for d in range(1, k + 1) if k % d == 0) for k in range(1, n + 1)]
    for m in range(1, n + 1):
        a[m] = Fraction(sum(r * sigma[k] * a[m - k] for k in range(1, m + 1)), m)
    return int(a[n])


# --- border strips through beta-numbers -------------------------------------


def beta_set(lam: Partition, nbeads: int) -> list[int]:
    lam = list(lam) + [0] * (nbeads - len(lam))
    return [lam[j] + nbeads - 1 - j for j in range(nbeads)]


def from_beta(beads: Sequence[int]) -> Partition:
    b = sorted(beads, reverse=True)
    k = len(b)
    return make_partition([b[j] - (k - 1 - j) for j in range(k)])


@lru_cache(maxsize=None)
def add_strips(lam: Partition, m: int) -> tuple[tuple[Partition, int], ...]:
    """All partitions obtained by adding a border strip of size m, with the
    sign (-1)^(height) where height = rows - 1."""
    k = len(lam) + m
    beads = beta_set(lam, k)
    occupied = set(beads)
    out = []
    for b in beads:
        if b + m not in occupied:
            between = sum(1 for c in beads if b < c < b + m)
            new = [c for c in beads if c != b] + [b + m]
            out.append((from_beta(new), (-1) ** between))
    out.sort(key=lambda t: t[0], reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def remove_strips(lam: Partition, m: int) -> tuple[tuple[Partition, int], ...]:
    """All partitions obtained by removing a border strip of size m, with sign."""
    k = len(lam)
    beads = beta_set(lam, k)
    occupied = set(beads)
    out = []
    for b in beads:
        if b - m >= 0 and b - m not in occupied:
            between = sum(1 for c in beads if b - m < c < b)
            new = [c for c in beads if c != b] + [b - m]
            out.append((from_beta(new), (-1) ** between))
    out.sort(key=lambda t: t[0], reverse=True)
    return tuple(out)


def mp_to_json(lam: MultiPartition) -> list[list[int]]:
    return [list(c) for c in lam]


def mp_from_json(data) -> MultiPartition:
    return make_multipartition(data)
