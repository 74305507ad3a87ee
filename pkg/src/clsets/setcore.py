"""Ground-set combinatorics on bitmasks.

A k-subset of ``{0, ..., n-1}`` is a single integer mask. Colexicographic
order on k-subsets coincides with numeric order on their masks, so the
colex rank is the global index used for characteristic vectors throughout
the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DivisibilityError, DomainError, RangeError

MAX_N = 64


def _pascal(size: int) -> list[list[int]]:
    rows = [[1]]
    for a in range(1, size + 1):
        prev = rows[-1]
        rows.append([1] + [prev[b - 1] + prev[b] for b in range(1, a)] + [1])
    return rows


_PASCAL = _pascal(MAX_N)


def binom(a: int, b: int) -> int:
    """Binomial coefficient with ``binom(a, b) = 0`` whenever ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    if a <= MAX_N:
        return _PASCAL[a][b]
    # a > 64 only arises in closed-form identities, never as a ground set
    from math import comb
    return comb(a, b)


def popcount(x: int) -> int:
    return bin(x).count("1")


def _check_nk(n: int, k: int) -> None:
    if not 1 <= n <= MAX_N:
        raise DomainError(f"ground set size must satisfy 1 <= n <= {MAX_N}, got {n}")
    if not 1 <= k <= n:
        raise DomainError(f"subset size must satisfy 1 <= k <= n, got k={k}, n={n}")


@dataclass(frozen=True)
class GroundSet:
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise DomainError(f"ground set size must satisfy 1 <= n <= {MAX_N}, got {self.n}")

    @property
    def mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True, order=True)
class KSubset:
    """A k-element subset of ``{0, ..., n-1}`` stored as a bitmask.

    Ordering compares ``mask`` first, which is colex order for fixed ``(n, k)``.
    """

    mask: int
    n: int
    k: int

    def __post_init__(self):
        _check_nk(self.n, self.k)
        if self.mask < 0 or self.mask >> self.n:
            raise DomainError(f"mask {self.mask:#x} has bits outside ground set of size {self.n}")
        if popcount(self.mask) != self.k:
            raise DomainError(f"mask {self.mask:#x} does not have exactly {self.k} elements")

    @classmethod
    def from_elements(cls, elements, n: int) -> KSubset:
        elements = list(elements)
        mask = 0
        for e in elements:
            if not 0 <= e < n:
                raise DomainError(f"element {e} outside ground set of size {n}")
            if mask >> e & 1:
                raise DomainError(f"duplicate element {e}")
            mask |= 1 << e
        return cls(mask, n, len(elements))

    @property
    def elements(self) -> tuple[int, ...]:
        m = self.mask
        return tuple(i for i in range(self.n) if m >> i & 1)

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.n and bool(self.mask >> e & 1)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.k

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class UniformPartition:
    """Pairwise disjoint k-subsets covering the ground set, in canonical block order."""

    blocks: tuple[KSubset, ...]

    def __post_init__(self):
        if not self.blocks:
            raise DomainError("a partition needs at least one block")
        n, k = self.blocks[0].n, self.blocks[0].k
        seen = 0
        for b in self.blocks:
            if (b.n, b.k) != (n, k):
                raise DomainError("blocks must share ground set and size")
            if seen & b.mask:
                raise DomainError("blocks are not pairwise disjoint")
            # canonical order: each block is led by the smallest uncovered element
            free = ~seen & ((1 << n) - 1)
            if b.mask & -b.mask != free & -free:
                raise DomainError("blocks are not in canonical order")
            seen |= b.mask
        if seen != (1 << n) - 1:
            raise DomainError("blocks do not cover the ground set")

    @property
    def n(self) -> int:
        return self.blocks[0].n

    @property
    def k(self) -> int:
        return self.blocks[0].k

    def as_lists(self) -> list[list[int]]:
        return [list(b.elements) for b in self.blocks]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return "|".join("".join(map(str, b.elements)) for b in self.blocks)


def colex_rank(s: KSubset) -> int:
    return sum(binom(e, i + 1) for i, e in enumerate(s.elements))


def mask_rank(mask: int) -> int:
    """Colex rank of a raw mask."""
    r, i, pos = 0, 0, 0
    while mask:
        if mask & 1:
            i += 1
            r += binom(pos, i)
        mask >>= 1
        pos += 1
    return r


def unrank_mask(r: int, n: int, k: int) -> int:
    _check_nk(n, k)
    if not 0 <= r < binom(n, k):
        raise RangeError(f"rank {r} outside [0, {binom(n, k)})")
    mask = 0
    c = n - 1
    for i in range(k, 0, -1):
        while binom(c, i) > r:
            c -= 1
        mask |= 1 << c
        r -= binom(c, i)
        c -= 1
    return mask


def colex_unrank(r: int, n: int, k: int) -> KSubset:
    return KSubset(unrank_mask(r, n, k), n, k)


def k_subset_masks(n: int, k: int) -> Iterator[int]:
    """All k-subset masks of an n-set in increasing (colex) order, via Gosper's hack."""
    _check_nk(n, k)
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = ripple | (((x ^ ripple) >> 2) // low)


def enumerate_k_subsets(n: int, k: int) -> Iterator[KSubset]:
    for m in k_subset_masks(n, k):
        yield KSubset(m, n, k)


def _require_divides(n: int, k: int) -> None:
    _check_nk(n, k)
    if n % k:
        raise DivisibilityError(f"k={k} does not divide n={n}")


def partition_masks(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Uniform partitions as tuples of block masks.

    The smallest uncovered element always leads the next block, and its
    companions are taken in lexicographic order, so every partition is
    produced once and already in canonical block order.
    """
    _require_divides(n, k)
    blocks: list[int] = []

    def rec(free: list[int]):
        if not free:
            yield tuple(blocks)
            return
        lead, rest = free[0], free[1:]
        for companions in itertools.combinations(rest, k - 1):
            mask = 1 << lead
            for c in companions:
                mask |= 1 << c
            blocks.append(mask)
            yield from rec([e for e in rest if not mask >> e & 1])
            blocks.pop()

    yield from rec(list(range(n)))


def enumerate_partitions(n: int, k: int) -> Iterator[UniformPartition]:
    for masks in partition_masks(n, k):
        yield UniformPartition(tuple(KSubset(m, n, k) for m in masks))


def count_partitions(n: int, k: int) -> int:
    """Exact number of k-uniform partitions: ``n! / ((n/k)! * (k!)^(n/k))``."""
    from math import factorial
    _require_divides(n, k)
    m = n // k
    return factorial(n) // (factorial(m) * factorial(k) ** m)


def disjoint(s: KSubset, t: KSubset) -> bool:
    if s.n != t.n:
        raise DomainError(f"subsets live on different ground sets ({s.n} vs {t.n})")
    return not s.mask & t.mask
