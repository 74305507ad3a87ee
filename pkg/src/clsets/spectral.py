"""Kneser (disjointness) matrix and exact verification of its spectrum.

The predicted spectrum of the Kneser matrix on k-subsets of an n-set has
eigenvalues ``(-1)^j * C(n-k-j, k-j)`` with multiplicity
``C(n, j) - C(n, j-1)`` for ``j = 0..k``. It is checked without floating
point: the product of ``K - lam*I`` over the distinct predicted eigenvalues
must vanish, each ``K - lam*I`` must have rank ``C(n,k) - mult(lam)``, and
the first two power sums of the spectrum must match ``trace(K)`` and
``trace(K^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ResourceError
from .exactla import ExactMatrix, matmul, rank_exact
from .setcore import _check_nk, binom, k_subset_masks

DEFAULT_MAX_SIZE = 1000


@lru_cache(maxsize=32)
def kneser_matrix(n: int, k: int) -> ExactMatrix:
    """0/1 matrix on k-subsets in colex order, 1 exactly for disjoint pairs."""
    masks = np.fromiter(k_subset_masks(n, k), dtype=np.uint64)
    K = (masks[:, None] & masks[None, :]) == 0
    return ExactMatrix(len(masks), len(masks), tuple(K.ravel().astype(int).tolist()))


@dataclass(frozen=True)
class SpectrumPrediction:
    n: int
    k: int
    raw: tuple[tuple[int, int], ...]
    pairs: tuple[tuple[int, int], ...]

    @property
    def eigenvalues(self) -> list[int]:
        return [lam for lam, _ in self.pairs]

    def multiplicity(self, lam: int) -> int:
        return dict(self.pairs).get(lam, 0)


def predicted_spectrum(n: int, k: int) -> SpectrumPrediction:
    """Eigenvalue/multiplicity list for ``j = 0..k``.

    ``raw`` keeps one entry per ``j``. ``pairs`` merges coinciding
    eigenvalues in order of first appearance and drops eigenvalues whose
    merged multiplicity is zero. For ``n < 2k`` every eigenvalue is 0 and
    some raw multiplicities are negative; the merged list is ``[(0, C(n,k))]``.
    """
    _check_nk(n, k)
    raw = tuple(
        ((-1) ** j * binom(n - k - j, k - j), binom(n, j) - binom(n, j - 1))
        for j in range(k + 1)
    )
    merged: dict[int, int] = {}
    for lam, mult in raw:
        merged[lam] = merged.get(lam, 0) + mult
    pairs = tuple((lam, m) for lam, m in merged.items() if m)
    return SpectrumPrediction(n, k, raw, pairs)


@dataclass
class SpectrumReport:
    n: int
    k: int
    prediction: SpectrumPrediction
    annihilation: bool = False
    ranks: list[dict] = field(default_factory=list)
    traces: dict = field(default_factory=dict)

    @property
    def ranks_ok(self) -> bool:
        return all(r["rank"] == r["expected"] for r in self.ranks)

    @property
    def traces_ok(self) -> bool:
        return all(self.traces.values())

    @property
    def passed(self) -> bool:
        return self.annihilation and self.ranks_ok and self.traces_ok

    def __bool__(self):
        return self.passed


def verify_spectrum(n: int, k: int, max_size: int = DEFAULT_MAX_SIZE) -> SpectrumReport:
    size = binom(n, k)
    if size > max_size:
        raise ResourceError(f"C({n},{k}) = {size} exceeds matrix size bound {max_size}")
    pred = predicted_spectrum(n, k)
    K = kneser_matrix(n, k)
    report = SpectrumReport(n, k, pred)

    prod = None
    for lam, _ in pred.pairs:
        factor = K.shift(lam)
        prod = factor if prod is None else matmul(prod, factor)
    report.annihilation = prod.is_zero()

    for lam, mult in pred.pairs:
        report.ranks.append(
            {"eigenvalue": lam, "rank": rank_exact(K.shift(lam)), "expected": size - mult}
        )

    s1 = sum(m * lam for lam, m in pred.pairs)
    s2 = sum(m * lam * lam for lam, m in pred.pairs)
    # trace(K^2) of a symmetric 0/1 matrix is its number of ones
    ones = sum(K.entries)
    report.traces = {
        "sum": s1 == K.trace() and (s1 == 0 if n > k else True),
        "sum_of_squares": s2 == ones == size * binom(n - k, k),
    }
    return report
