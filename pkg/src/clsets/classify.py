"""Exhaustive search for Cameron-Liebler classes and isomorph rejection.

Isomorphism means relabeling the ground set (the action of Sym(n)).
Complementation is not quotiented out.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterable, Optional

import numpy as np

from .clkernel import (
    Family,
    anti_pencil,
    check_by_partitions,
    family_block,
    parameter,
    point_pencil,
    tables,
)
from .errors import DomainError, InconsistencyError, ResourceError
from .setcore import binom

MAX_BRUTE_LENGTH = 24
MAX_CANON_N = 10
CHUNK = 1 << 16


def enumerate_cl_brute(n: int, k: int, threads: int = 1) -> list[Family]:
    """Every Cameron-Liebler class of k-subsets of an n-set, in increasing bit order.

    All ``2^C(n,k)`` characteristic vectors are screened in numpy blocks by
    their intersection numbers with the uniform partitions; survivors are
    confirmed one at a time by ``check_by_partitions``. The kernel test is
    not used as a screen: for ``n = 2k`` with ``k >= 3`` it rejects genuine
    classes.
    """
    N = binom(n, k)
    if N > MAX_BRUTE_LENGTH:
        raise ResourceError(f"2^C({n},{k}) = 2^{N} families exceeds bound 2^{MAX_BRUTE_LENGTH}")
    t = tables(n, k)
    t.partitions  # DivisibilityError up front when k does not divide n
    pt = t.np_partitions.T

    def scan(start: int) -> list[int]:
        block = family_block(N, start, min(start + CHUNK, 1 << N))
        hits = block @ pt
        keep = np.flatnonzero((hits == hits[:, :1]).all(axis=1))
        return [start + int(i) for i in keep]

    starts = range(0, 1 << N, CHUNK)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            found = [c for part in pool.map(scan, starts) for c in part]
    else:
        found = [c for s in starts for c in scan(s)]

    out = []
    for code in found:
        f = Family(n, k, code)
        ok, witness = check_by_partitions(f)
        if not ok:
            raise InconsistencyError(f"{f!r} (bits {code:#x}) passed the block screen but meets {witness!r} wrongly")
        out.append(f)
    return out


@lru_cache(maxsize=16)
def _binom_np(n: int, k: int) -> np.ndarray:
    return np.array([[binom(a, b) for b in range(k + 1)] for a in range(n + 1)], dtype=np.int64)


def _rank_images(n: int, k: int, perms: np.ndarray) -> np.ndarray:
    """``out[i, r]`` is the colex rank of the image of subset ``r`` under ``perms[i]``."""
    t = tables(n, k)
    elems = np.array([[e for e in range(n) if m >> e & 1] for m in t.masks], dtype=np.int64)
    img = np.sort(perms[:, elems], axis=2)
    B = _binom_np(n, k)
    return sum(B[img[:, :, i], i + 1] for i in range(k))


@lru_cache(maxsize=8)
def _image_table(n: int, k: int) -> np.ndarray:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    return _rank_images(n, k, perms)


def _image_tables(n: int, k: int) -> Iterable[np.ndarray]:
    if n <= 8:
        yield _image_table(n, k)
        return
    perms = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(perms, 40320))
        if not chunk:
            return
        yield _rank_images(n, k, np.array(chunk, dtype=np.int64))


@dataclass(frozen=True)
class CanonicalFamily:
    family: Family
    canonical_bits: str
    stabilizer_order: int

    @property
    def orbit_size(self) -> int:
        return factorial(self.family.n) // self.stabilizer_order

    @property
    def canonical_family(self) -> Family:
        return Family(self.family.n, self.family.k, int(self.canonical_bits[::-1], 2))


def canonical_form(f: Family) -> CanonicalFamily:
    """Lexicographically least relabeled characteristic vector over all of Sym(n).

    Bits are compared in colex-rank order, position 0 first.
    """
    n, k = f.n, f.k
    if n > MAX_CANON_N:
        raise ResourceError(f"n={n} exceeds the full permutation sweep bound {MAX_CANON_N}")
    chi = f.to_array()
    best = None
    stab = 0
    for table in _image_tables(n, k):
        images = np.zeros(table.shape, dtype=np.uint8)
        np.put_along_axis(images, table, np.broadcast_to(chi, table.shape), axis=1)
        stab += int((images == chi).all(axis=1).sum())
        packed = np.packbits(images, axis=1)
        cand = packed[np.lexsort(packed.T[::-1])[0]]
        if best is None or bytes(cand) < bytes(best):
            best = cand
    bits = np.unpackbits(best)[: f.length]
    return CanonicalFamily(f, "".join(map(str, bits)), stab)


def orbits(families: Iterable[Family]) -> list[CanonicalFamily]:
    """One representative per isomorphism class, sorted by canonical bits."""
    seen: dict[str, CanonicalFamily] = {}
    for f in families:
        c = canonical_form(f)
        seen.setdefault(c.canonical_bits, c)
    return [seen[key] for key in sorted(seen)]


@dataclass
class ClassificationResult:
    n: int
    k: int
    families: list[Family]
    counts_by_parameter: dict[int, int]
    matches_theorem: Optional[bool] = None
    orbits_by_parameter: Optional[dict[int, list[CanonicalFamily]]] = None

    @property
    def total(self) -> int:
        return len(self.families)

    def by_parameter(self) -> dict[int, list[Family]]:
        out: dict[int, list[Family]] = {}
        for f in self.families:
            out.setdefault(int(parameter(f)), []).append(f)
        return dict(sorted(out.items()))


def theorem_families(n: int, k: int) -> set[int]:
    """Bits of the classes allowed when ``n >= 3k``: trivial ones, pencils, anti-pencils."""
    out = {Family.empty(n, k).bits, Family.full(n, k).bits}
    for p in range(n):
        out.add(point_pencil(n, k, p).bits)
        out.add(anti_pencil(n, k, p).bits)
    return out


def classify(n: int, k: int, up_to_iso: bool = False, threads: int = 1) -> ClassificationResult:
    families = enumerate_cl_brute(n, k, threads=threads)
    counts: dict[int, int] = {}
    for f in families:
        x = parameter(f)
        if x.denominator != 1:
            raise InconsistencyError(f"{f!r} is a class with parameter {x}")
        counts[int(x)] = counts.get(int(x), 0) + 1
    result = ClassificationResult(n, k, families, dict(sorted(counts.items())))
    if n >= 3 * k and k >= 2:
        result.matches_theorem = {f.bits for f in families} == theorem_families(n, k)
    if up_to_iso:
        result.orbits_by_parameter = {
            x: orbits(fs) for x, fs in result.by_parameter().items()
        }
    return result


def verify_classification(n: int, k: int, threads: int = 1) -> ClassificationResult:
    """Brute-force check that only trivial classes, pencils and anti-pencils exist.

    Only meaningful for ``n >= 3k`` and ``k >= 2``; other cases are rejected.
    """
    if k < 2:
        raise DomainError("k = 1: every family of x singletons is a class, nothing to classify")
    if n < 3 * k:
        raise DomainError(f"n={n} < 3k={3 * k}: outside the range of the classification")
    return classify(n, k, threads=threads)


@dataclass
class EKRCensus:
    k: int
    total: int
    nonisomorphic: int
    families: list[Family] = field(repr=False)
    orbits: list[CanonicalFamily] = field(repr=False)


def pair_choice_families(k: int) -> Iterable[Family]:
    """All families picking one k-set from each complementary pair of a 2k-set."""
    n = 2 * k
    t = tables(n, k)
    full = (1 << n) - 1
    pairs = [(t.rank_of[m], t.rank_of[full ^ m]) for m in t.masks if m & 1]
    for code in range(1 << len(pairs)):
        bits = 0
        for i, (a, b) in enumerate(pairs):
            bits |= 1 << (b if code >> i & 1 else a)
        yield Family(n, k, bits)


def enumerate_ekr_2k(k: int, max_k: int = 3) -> EKRCensus:
    """Count the parameter-1 classes of a 2k-set and their isomorphism classes.

    Every pair choice is confirmed against all uniform partitions to be a
    class with parameter 1.
    """
    if k < 1:
        raise DomainError("k must be positive")
    if k > max_k:
        raise ResourceError(f"k={k}: 2^{binom(2 * k - 1, k - 1)} pair choices exceeds max_k={max_k}")
    families = []
    for f in pair_choice_families(k):
        ok, _ = check_by_partitions(f)
        if not (ok and parameter(f) == 1):
            raise InconsistencyError(f"pair choice {f.as_lists()} is not a class with parameter 1")
        families.append(f)
    reps = orbits(families)
    return EKRCensus(k, len(families), len(reps), families, reps)


def is_intersecting(f: Family) -> bool:
    t = tables(f.n, f.k)
    return all(not f.bits & t.disjoint_bits[r] for r in f.ranks())


def pencil_point(f: Family) -> Optional[int]:
    """The common point if ``f`` is exactly a point pencil, else None."""
    for p in range(f.n):
        if f.bits == point_pencil(f.n, f.k, p).bits:
            return p
    return None


def ekr_bound_check(n: int, k: int, families: Iterable[Family]) -> bool:
    """Size bound ``C(n-1, k-1)`` for intersecting families, with equality only for pencils when ``n > 2k``."""
    if n < 2 * k:
        raise DomainError(f"n={n} < 2k={2 * k}")
    bound = binom(n - 1, k - 1)
    for f in families:
        if (f.n, f.k) != (n, k):
            raise DomainError(f"{f!r} is not over ({n},{k})")
        if not is_intersecting(f):
            raise DomainError(f"{f!r} contains two disjoint members")
        if f.size > bound:
            return False
        if n >= 2 * k + 1 and f.size == bound and pencil_point(f) is None:
            return False
    return True


def random_intersecting_family(n: int, k: int, rng: np.random.Generator) -> Family:
    """Greedy maximal intersecting family, scanning k-subsets in a random order."""
    t = tables(n, k)
    bits = 0
    for r in rng.permutation(t.size):
        r = int(r)
        if not bits & t.disjoint_bits[r]:
            bits |= 1 << r
    return Family(n, k, bits)
