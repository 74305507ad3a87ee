"""Families of k-subsets and the equivalent Cameron-Liebler tests.

A family is stored as an integer whose bit ``r`` is set when the k-subset of
colex rank ``r`` belongs to it. Five predicates decide whether a family is a
Cameron-Liebler class; they are computed independently of each other:

``partitions``
    every k-uniform partition meets the family in exactly ``x`` blocks
``disjointness``
    every k-subset ``pi`` is disjoint from ``(x - chi[pi]) * C(n-k-1, k-1)``
    members
``eigenvector``
    ``chi - (kx/n) j`` lies in the Kneser eigenspace for ``-C(n-k-1, k-1)``
``rowspace``
    ``chi`` is in the row space of the element/k-subset incidence matrix
``kernel``
    ``chi`` is orthogonal to the kernel of that incidence matrix

Here ``x = |family| / C(n-1, k-1)``. The single-family functions work on
Python integers through ``exactla``. ``verdict_table`` evaluates the same
five predicates on a whole block of families at once with int64 numpy
arithmetic, for the exhaustive sweeps.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from . import exactla
from .errors import DivisibilityError, DomainError
from .exactla import ExactMatrix, ExactVector
from .setcore import (
    KSubset,
    UniformPartition,
    _check_nk,
    binom,
    k_subset_masks,
    mask_rank,
    partition_masks,
    popcount,
)
from .spectral import kneser_matrix, predicted_spectrum

VERDICTS = ("partitions", "disjointness", "eigenvector", "rowspace", "kernel")


class Tables:
    """Per-(n, k) matrices and indexes, each built on first use."""

    def __init__(self, n: int, k: int):
        _check_nk(n, k)
        self.n, self.k = n, k
        self.size = binom(n, k)
        self.masks = list(k_subset_masks(n, k))
        self.rank_of = {m: r for r, m in enumerate(self.masks)}

    @cached_property
    def incidence(self) -> ExactMatrix:
        return ExactMatrix.from_rows(
            [[m >> p & 1 for m in self.masks] for p in range(self.n)]
        )

    @cached_property
    def kneser(self) -> ExactMatrix:
        return kneser_matrix(self.n, self.k)

    @cached_property
    def disjoint_bits(self) -> list[int]:
        # bit s of entry r is set iff subsets r and s are disjoint
        out = []
        for a in self.masks:
            bits = 0
            for s, b in enumerate(self.masks):
                if not a & b:
                    bits |= 1 << s
            out.append(bits)
        return out

    @cached_property
    def partitions(self) -> list[tuple[int, ...]]:
        """Partitions as tuples of block ranks, in enumeration order."""
        if self.n % self.k:
            raise DivisibilityError(f"k={self.k} does not divide n={self.n}")
        return [tuple(self.rank_of[m] for m in p) for p in partition_masks(self.n, self.k)]

    @cached_property
    def partition_bits(self) -> list[int]:
        return [sum(1 << r for r in p) for p in self.partitions]

    @cached_property
    def kernel(self) -> list[ExactVector]:
        return exactla.kernel_basis(self.incidence)

    @cached_property
    def kernel_sparse(self) -> list[tuple[tuple[int, int], ...]]:
        return [tuple((i, x) for i, x in enumerate(b) if x) for b in self.kernel]

    @cached_property
    def incidence_rank(self) -> int:
        return exactla.rank_exact(self.incidence)

    # dense numpy forms for verdict_table
    @cached_property
    def np_kneser(self) -> np.ndarray:
        return np.array(self.kneser.to_rows(), dtype=np.int64)

    @cached_property
    def np_partitions(self) -> np.ndarray:
        P = np.zeros((len(self.partitions), self.size), dtype=np.int64)
        for i, p in enumerate(self.partitions):
            P[i, list(p)] = 1
        return P

    @cached_property
    def np_kernel(self) -> np.ndarray:
        if not self.kernel:
            return np.zeros((0, self.size), dtype=np.int64)
        return np.array([b.entries for b in self.kernel], dtype=np.int64)

    @cached_property
    def np_rref(self) -> tuple[np.ndarray, list[int], int]:
        rows, pivots, d = exactla.rref(self.incidence)
        return np.array(rows, dtype=np.int64), pivots, d


_tables: dict[tuple[int, int], Tables] = {}
_tables_lock = threading.Lock()


def tables(n: int, k: int) -> Tables:
    key = (n, k)
    t = _tables.get(key)
    if t is None:
        with _tables_lock:
            t = _tables.get(key)
            if t is None:
                t = _tables[key] = Tables(n, k)
    return t


@dataclass(frozen=True)
class Family:
    """Set of k-subsets of an n-set; bit ``r`` of ``bits`` is colex rank ``r``."""

    n: int
    k: int
    bits: int = 0

    def __post_init__(self):
        _check_nk(self.n, self.k)
        if self.bits < 0 or self.bits >> binom(self.n, self.k):
            raise DomainError("characteristic vector longer than C(n, k)")

    @classmethod
    def empty(cls, n: int, k: int) -> Family:
        return cls(n, k, 0)

    @classmethod
    def full(cls, n: int, k: int) -> Family:
        return cls(n, k, (1 << binom(n, k)) - 1)

    @classmethod
    def from_subsets(cls, n: int, k: int, subsets: Iterable) -> Family:
        """Build from KSubsets or iterables of elements; duplicates are an error."""
        bits = 0
        for s in subsets:
            if not isinstance(s, KSubset):
                s = KSubset.from_elements(s, n)
            if (s.n, s.k) != (n, k):
                raise DomainError(f"subset {s!r} is not a {k}-subset of a {n}-set")
            bit = 1 << mask_rank(s.mask)
            if bits & bit:
                raise DomainError(f"duplicate subset {s!r}")
            bits |= bit
        return cls(n, k, bits)

    @property
    def length(self) -> int:
        return binom(self.n, self.k)

    @property
    def size(self) -> int:
        return popcount(self.bits)

    def __len__(self):
        return self.size

    def __contains__(self, s: KSubset) -> bool:
        return bool(self.bits >> mask_rank(s.mask) & 1)

    def ranks(self) -> list[int]:
        return [r for r in range(self.length) if self.bits >> r & 1]

    def members(self) -> list[KSubset]:
        masks = tables(self.n, self.k).masks
        return [KSubset(masks[r], self.n, self.k) for r in self.ranks()]

    def as_lists(self) -> list[list[int]]:
        return [list(s.elements) for s in self.members()]

    def chi(self) -> ExactVector:
        return ExactVector((self.bits >> r) & 1 for r in range(self.length))

    def to_array(self) -> np.ndarray:
        return np.array([(self.bits >> r) & 1 for r in range(self.length)], dtype=np.uint8)

    def relabel(self, perm) -> Family:
        """Image under the ground-set permutation ``e -> perm[e]``."""
        t = tables(self.n, self.k)
        bits = 0
        for r in self.ranks():
            m = t.masks[r]
            img = 0
            for e in range(self.n):
                if m >> e & 1:
                    img |= 1 << perm[e]
            bits |= 1 << t.rank_of[img]
        return Family(self.n, self.k, bits)

    def __repr__(self):
        return f"Family(n={self.n}, k={self.k}, size={self.size})"


def parameter(f: Family) -> Fraction:
    """``|f| / C(n-1, k-1)`` as a reduced fraction."""
    return Fraction(f.size, binom(f.n - 1, f.k - 1))


def point_pencil(n: int, k: int, p: int) -> Family:
    if not 0 <= p < n:
        raise DomainError(f"point {p} outside ground set of size {n}")
    bits = 0
    for r, m in enumerate(tables(n, k).masks):
        if m >> p & 1:
            bits |= 1 << r
    return Family(n, k, bits)


def complement(f: Family) -> Family:
    return Family(f.n, f.k, f.bits ^ ((1 << f.length) - 1))


def anti_pencil(n: int, k: int, p: int) -> Family:
    return complement(point_pencil(n, k, p))


def incidence_matrix(n: int, k: int) -> ExactMatrix:
    return tables(n, k).incidence


def _integer_parameter(f: Family) -> Optional[int]:
    x = parameter(f)
    return x.numerator if x.denominator == 1 else None


def check_by_partitions(f: Family) -> tuple[bool, Optional[UniformPartition]]:
    t = tables(f.n, f.k)
    parts = t.partitions  # raises DivisibilityError when k does not divide n
    x = _integer_parameter(f)
    for i, pbits in enumerate(t.partition_bits):
        if x is None or popcount(f.bits & pbits) != x:
            return False, _partition(t, parts[i])
    return True, None


def _partition(t: Tables, ranks: tuple[int, ...]) -> UniformPartition:
    return UniformPartition(tuple(KSubset(t.masks[r], t.n, t.k) for r in ranks))


def check_by_disjointness(f: Family) -> tuple[bool, Optional[KSubset]]:
    t = tables(f.n, f.k)
    x = _integer_parameter(f)
    if x is None:
        return False, KSubset(t.masks[0], f.n, f.k)
    c = binom(f.n - f.k - 1, f.k - 1)
    for r, dbits in enumerate(t.disjoint_bits):
        if popcount(f.bits & dbits) != (x - (f.bits >> r & 1)) * c:
            return False, KSubset(t.masks[r], f.n, f.k)
    return True, None


def check_by_eigenvector(f: Family) -> bool:
    n, k = f.n, f.k
    # integer multiple of chi - (kx/n) j
    u = n * binom(n - 1, k - 1) * f.chi() - ExactVector.ones(f.length) * (k * f.size)
    if u.is_zero():
        return True
    lhs = exactla.mat_vec(tables(n, k).kneser, u)
    return lhs == -binom(n - k - 1, k - 1) * u


def check_by_rowspace(f: Family) -> bool:
    return exactla.in_row_space(tables(f.n, f.k).incidence, f.chi())


def check_by_kernel(f: Family) -> tuple[bool, Optional[ExactVector]]:
    t = tables(f.n, f.k)
    bits = f.bits
    for b, sparse in zip(t.kernel, t.kernel_sparse):
        if sum(x for i, x in sparse if bits >> i & 1):
            return False, b
    return True, None


@dataclass
class CLReport:
    n: int
    k: int
    size: int
    parameter: Fraction
    verdicts: dict[str, Optional[bool]]
    witnesses: dict[str, object] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def defined(self) -> list[bool]:
        return [v for v in self.verdicts.values() if v is not None]

    @property
    def consistent(self) -> bool:
        return len(set(self.defined)) <= 1

    @property
    def all_true(self) -> bool:
        return all(self.defined)

    @property
    def all_false(self) -> bool:
        return not any(self.defined)

    @property
    def is_cl(self) -> bool:
        """Membership by definition: every uniform partition meets the family ``x`` times."""
        return bool(self.verdicts["partitions"])

    @property
    def witness(self):
        for tag in ("partitions", "disjointness", "kernel"):
            if tag in self.witnesses:
                return self.witnesses[tag]
        return None


def full_check(f: Family) -> CLReport:
    report = CLReport(f.n, f.k, f.size, parameter(f), dict.fromkeys(VERDICTS))
    v, w = report.verdicts, report.witnesses

    if f.n % f.k == 0:
        v["partitions"], wp = check_by_partitions(f)
        if wp is not None:
            w["partitions"] = wp
    else:
        report.notes.append(
            f"k={f.k} does not divide n={f.n}: no uniform partitions; "
            "agreement of the remaining tests is reported, not guaranteed"
        )
    v["disjointness"], wd = check_by_disjointness(f)
    if wd is not None:
        w["disjointness"] = wd
    v["eigenvector"] = check_by_eigenvector(f)
    v["rowspace"] = check_by_rowspace(f)
    v["kernel"], wk = check_by_kernel(f)
    if wk is not None:
        w["kernel"] = wk

    split = eigenspace_excess(f.n, f.k)
    if split:
        report.notes.append(split)
    if report.parameter.denominator != 1:
        report.notes.append(f"parameter {report.parameter} is not an integer")
    if not report.consistent:
        report.notes.append("internal inconsistency: verdicts disagree")
    return report


def eigenspace_excess(n: int, k: int) -> Optional[str]:
    """Describe why the tests can split for ``(n, k)``, or None when they cannot.

    The row space of the incidence matrix has dimension ``n``. When the
    Kneser eigenvalue ``-C(n-k-1, k-1)`` has multiplicity above ``n - 1``
    (``n = 2k`` with ``k >= 3``, where every eigenvalue is +1 or -1), the
    eigenvector condition describes a larger space and the row-space and
    kernel tests become strictly stronger than the other three.
    """
    if n % k or n < 2 * k:
        return None
    lam = -binom(n - k - 1, k - 1)
    mult = predicted_spectrum(n, k).multiplicity(lam)
    if mult == n - 1:
        return None
    return (
        f"Kneser eigenvalue {lam} has multiplicity {mult} > n-1 = {n - 1}: "
        "rowspace/kernel verdicts may be false for classes that pass the other tests"
    )


# --- batched evaluation ----------------------------------------------------

def family_block(length: int, start: int, stop: int) -> np.ndarray:
    """0/1 matrix whose row ``i`` is the characteristic vector of family ``start + i``."""
    codes = np.arange(start, stop, dtype=np.int64)
    return ((codes[:, None] >> np.arange(length, dtype=np.int64)) & 1).astype(np.int64)


def verdict_table(n: int, k: int, chis: np.ndarray) -> np.ndarray:
    """Boolean ``(m, 5)`` array of the five verdicts, columns in ``VERDICTS`` order.

    ``chis`` is an ``(m, C(n,k))`` 0/1 array. Requires ``k | n``. The
    row-space column uses the reduced echelon form of the incidence matrix
    (coordinates at the pivot columns must reproduce the whole vector), so it
    does not go through the kernel basis.
    """
    t = tables(n, k)
    N = t.size
    chis = np.asarray(chis, dtype=np.int64)
    if chis.ndim != 2 or chis.shape[1] != N:
        raise DomainError(f"expected an (m, {N}) array")
    d = binom(n - 1, k - 1)
    c = binom(n - k - 1, k - 1)
    R, pivots, D = t.np_rref
    deg = binom(n - k, k)
    bound = max(n * d * N * max(deg, 1), D * N * int(np.abs(R).max(initial=1)))
    if bound >= 1 << 62:
        raise DomainError(f"({n},{k}) too large for int64 batch evaluation")

    sizes = chis.sum(axis=1)
    integral = sizes % d == 0
    x = sizes // d
    out = np.empty((len(chis), 5), dtype=bool)

    hits = chis @ t.np_partitions.T
    out[:, 0] = integral & (hits == x[:, None]).all(axis=1)

    disj = chis @ t.np_kneser
    out[:, 1] = integral & (disj == (x[:, None] - chis) * c).all(axis=1)

    u = n * d * chis - (k * sizes)[:, None]
    out[:, 2] = (u @ t.np_kneser == -c * u).all(axis=1)

    out[:, 3] = (D * chis == chis[:, pivots] @ R).all(axis=1)

    out[:, 4] = (chis @ t.np_kernel.T == 0).all(axis=1)
    return out
