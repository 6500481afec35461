"""Exact symmetric integer matrices and the eccentricity matrix family.

The eccentricity matrix keeps the distance ``d(i, j)`` exactly when it equals
``min(e(i), e(j))`` and zeroes every other entry.  Its Laplacian and signless
Laplacian are ``Diag(tr) -/+ E`` where ``tr`` holds the row sums of ``E``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

if TYPE_CHECKING:
    from eccspec.metrics import DistanceProfile


@dataclass(frozen=True)
class SymIntMatrix:
    """Dense symmetric matrix of Python (arbitrary-precision) integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SymIntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int) -> "SymIntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "SymIntMatrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, n: int) -> "SymIntMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def ones(cls, n: int) -> "SymIntMatrix":
        return cls(tuple((1,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "SymIntMatrix") -> "SymIntMatrix":
        return SymIntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "SymIntMatrix") -> "SymIntMatrix":
        return SymIntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "SymIntMatrix":
        return SymIntMatrix(tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, k: int) -> "SymIntMatrix":
        return SymIntMatrix(tuple(tuple(k * a for a in r) for r in self.entries))

    __rmul__ = scale

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.entries]

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.n))

    def frobenius_norm(self) -> float:
        return math.sqrt(sum(x * x for r in self.entries for x in r))

    def permuted(self, order: Sequence[int]) -> "SymIntMatrix":
        """P M P^T with new index k standing for old index order[k]."""
        return SymIntMatrix(tuple(tuple(self.entries[i][j] for j in order) for i in order))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[int]]:
        return [[self.entries[i][j] for j in cols] for i in rows]

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only float64 copy for numerical routines."""
        a = np.array(self.entries, dtype=np.float64).reshape(self.n, self.n)
        a.setflags(write=False)
        return a

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        width = max((len(str(x)) for r in self.entries for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.entries)


@dataclass(frozen=True)
class EccStats:
    tr: tuple[int, ...]
    tr_max: int
    tr_min: int
    tr_avg: Fraction
    wiener: int
    sq_sum: int
    regular_degree: int | None


def eccentricity_matrix(dp: "DistanceProfile") -> SymIntMatrix:
    n = dp.n
    dist, ecc = dp.dist, dp.ecc
    return SymIntMatrix(
        tuple(
            tuple(dist[i][j] if i != j and dist[i][j] == min(ecc[i], ecc[j]) else 0 for j in range(n))
            for i in range(n)
        )
    )


def ecc_stats(E: SymIntMatrix) -> EccStats:
    tr = tuple(E.row_sums())
    total = sum(tr)
    n = E.n
    sq_sum = sum(E.entries[i][j] ** 2 for i in range(n) for j in range(i + 1, n))
    regular = tr[0] if len(set(tr)) == 1 else None
    return EccStats(
        tr=tr,
        tr_max=max(tr),
        tr_min=min(tr),
        tr_avg=Fraction(total, n),
        wiener=total // 2,
        sq_sum=sq_sum,
        regular_degree=regular,
    )


def ecc_laplacian(E: SymIntMatrix, stats: EccStats | None = None) -> SymIntMatrix:
    stats = stats or ecc_stats(E)
    return SymIntMatrix.diagonal(stats.tr) - E


def ecc_signless_laplacian(E: SymIntMatrix, stats: EccStats | None = None) -> SymIntMatrix:
    stats = stats or ecc_stats(E)
    return SymIntMatrix.diagonal(stats.tr) + E
