"""Exact dense linear algebra over the integers.

Everything here is exact. Rank and echelon forms come from fraction-free
(Bareiss) elimination, so intermediate entries stay integral and every
division is exact. Large rank and product computations are handed to FLINT
(``python-flint``), which is also exact; the crossover is controlled by
``FLINT_THRESHOLD``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError

# entries count above which rank/matmul use FLINT instead of pure Python
FLINT_THRESHOLD = 40_000


@dataclass(frozen=True)
class ExactVector:
    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))
        if not self.entries:
            raise DomainError("vectors must have positive length")

    @classmethod
    def ones(cls, length: int) -> ExactVector:
        return cls([1] * length)

    @classmethod
    def zeros(cls, length: int) -> ExactVector:
        return cls([0] * length)

    @property
    def length(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _same_length(self, other: ExactVector) -> None:
        if len(other) != len(self):
            raise DomainError(f"length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: ExactVector) -> ExactVector:
        self._same_length(other)
        return ExactVector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: ExactVector) -> ExactVector:
        self._same_length(other)
        return ExactVector(a - b for a, b in zip(self.entries, other.entries))

    def __mul__(self, c: int) -> ExactVector:
        return ExactVector(c * a for a in self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> ExactVector:
        return ExactVector(-a for a in self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DomainError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise DomainError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ExactMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if not rows:
            raise DomainError("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DomainError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, size: int) -> ExactMatrix:
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix.from_rows(list(zip(*self.to_rows())))

    def with_row(self, v: ExactVector) -> ExactMatrix:
        if len(v) != self.cols:
            raise DomainError(f"row of length {len(v)} for a matrix with {self.cols} columns")
        return ExactMatrix(self.rows + 1, self.cols, self.entries + v.entries)

    def shift(self, lam: int) -> ExactMatrix:
        """``self - lam * I`` for a square matrix."""
        if self.rows != self.cols:
            raise DomainError("shift needs a square matrix")
        e = list(self.entries)
        for i in range(self.rows):
            e[i * self.cols + i] -= lam
        return ExactMatrix(self.rows, self.cols, tuple(e))

    def trace(self) -> int:
        if self.rows != self.cols:
            raise DomainError("trace needs a square matrix")
        return sum(self.entries[i * (self.cols + 1)] for i in range(self.rows))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_flint(self):
        import flint
        return flint.fmpz_mat(self.rows, self.cols, list(self.entries))


def _bareiss_echelon(rows: list[list[int]], ncols: int, reduce_above: bool = False):
    """Fraction-free elimination, in place.

    Returns ``(r, pivots, d)``: the first ``r`` rows are the nonzero echelon
    rows with pivots in columns ``pivots`` and ``d`` the last pivot value.
    With ``reduce_above`` the elimination runs Gauss-Jordan style and every
    pivot entry ends up equal to ``d`` with zeros elsewhere in its column.
    """
    nr = len(rows)
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        piv = prow[c]
        targets = range(nr) if reduce_above else range(r + 1, nr)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
            elif piv != prev:
                rows[i] = [piv * x // prev for x in row]
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, prev


def _rank_bareiss(m: ExactMatrix) -> int:
    rows = [list(r) for r in m.to_rows()]
    if m.rows > m.cols:
        rows = [list(r) for r in zip(*rows)]
    r, _, _ = _bareiss_echelon(rows, len(rows[0]))
    return r


def rank_exact(m: ExactMatrix, method: str = "auto") -> int:
    """Rank over the rationals.

    ``method`` is ``"bareiss"``, ``"flint"`` or ``"auto"`` (FLINT above
    ``FLINT_THRESHOLD`` entries).
    """
    if method == "auto":
        method = "flint" if len(m.entries) > FLINT_THRESHOLD else "bareiss"
    if method == "bareiss":
        return _rank_bareiss(m)
    if method == "flint":
        return m.to_flint().rank()
    raise ValueError(f"unknown rank method {method!r}")


def rref(m: ExactMatrix) -> tuple[list[list[int]], list[int], int]:
    """Integer-scaled reduced row echelon form.

    Returns ``(rows, pivots, d)`` such that ``rows / d`` is the RREF of
    ``m`` over the rationals (zero rows dropped) and ``d > 0``.
    """
    rows = [list(r) for r in m.to_rows()]
    r, pivots, d = _bareiss_echelon(rows, m.cols, reduce_above=True)
    rows = rows[:r]
    if d < 0:
        rows = [[-x for x in row] for row in rows]
        d = -d
    return rows, pivots, d


def _normalize(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return v
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return [x // g for x in v]


def kernel_basis(m: ExactMatrix) -> list[ExactVector]:
    """Integer basis of the right null space, one vector per free column.

    Each vector has content 1 and a positive first nonzero entry.
    """
    rows, pivots, d = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [0] * m.cols
        v[f] = d
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(ExactVector(_normalize(v)))
    return basis


def in_row_space(m: ExactMatrix, v: ExactVector) -> bool:
    if len(v) != m.cols:
        raise DomainError(f"vector of length {len(v)} against {m.cols} columns")
    return rank_exact(m) == rank_exact(m.with_row(v))


def mat_vec(m: ExactMatrix, v: ExactVector) -> ExactVector:
    if len(v) != m.cols:
        raise DomainError(f"vector of length {len(v)} against {m.cols} columns")
    x = v.entries
    e = m.entries
    c = m.cols
    return ExactVector(
        sum(a * b for a, b in zip(e[i * c:(i + 1) * c], x) if a) for i in range(m.rows)
    )


def dot(u: ExactVector, v: ExactVector) -> int:
    if len(u) != len(v):
        raise DomainError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u.entries, v.entries))


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise DomainError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.rows * a.cols * b.cols > FLINT_THRESHOLD * 25:
        p = a.to_flint() * b.to_flint()
        return ExactMatrix(a.rows, b.cols, tuple(int(x) for x in p.entries()))
    bt = list(zip(*b.to_rows()))
    out = []
    for i in range(a.rows):
        ar = a.row(i)
        out.extend(sum(x * y for x, y in zip(ar, col)) for col in bt)
    return ExactMatrix(a.rows, b.cols, tuple(out))
