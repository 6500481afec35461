"""Spectra and exact characteristic polynomials of symmetric integer matrices.

Numerical spectra come from the cyclic Jacobi kernel (see :mod:`eccspec.kernels`).
Characteristic polynomials are computed exactly with the Faddeev-LeVerrier
recurrence over the integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from eccspec import kernels
from eccspec.matrices import SymIntMatrix

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


def default_group_tol(M: SymIntMatrix | None = None) -> float:
    return 1e-6 * max(1.0, M.frobenius_norm() if M is not None else 1.0)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted in descending order, with multiplicity groups."""

    values: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]
    tol: float

    @classmethod
    def from_values(cls, values: Iterable[float], tol: float = 1e-6) -> "Spectrum":
        vals = tuple(sorted((float(v) for v in values), reverse=True))
        return cls(vals, group_values(vals, tol), tol)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def largest(self) -> float:
        return self.values[0]

    @property
    def smallest(self) -> float:
        return self.values[-1]

    @property
    def spectral_radius(self) -> float:
        return max(abs(self.values[0]), abs(self.values[-1])) if self.values else 0.0

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(1 for v in self.values if abs(v - value) <= tol)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.float64)


def group_values(values: Sequence[float], tol: float) -> tuple[tuple[float, int], ...]:
    """Group a descending sequence: a group closes once a value drifts more than
    ``tol`` from the group's first member.  The representative is the mean."""
    groups: list[list[float]] = []
    for v in values:
        if groups and abs(groups[-1][0] - v) <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple((sum(g) / len(g), len(g)) for g in groups)


def sym_eigh(
    M: SymIntMatrix | np.ndarray,
    tol: float = JACOBI_TOL,
    group_tol: float | None = None,
) -> tuple[Spectrum, np.ndarray]:
    """Eigenvalues (descending) and matching orthonormal eigenvectors as columns."""
    return _solve(M, tol, group_tol, want_vectors=True)  # type: ignore[return-value]


def sym_eigenvalues(M: SymIntMatrix | np.ndarray, tol: float = JACOBI_TOL, group_tol: float | None = None) -> Spectrum:
    """All eigenvalues of a symmetric matrix.

    Jacobi sweeps stop once the off-diagonal Frobenius norm is at most
    ``tol * ||M||_F``.  ``group_tol`` defaults to ``1e-6 * max(1, ||M||_F)``.
    """
    spec, _ = _solve(M, tol, group_tol, want_vectors=False)
    return spec


def _solve(M, tol, group_tol, want_vectors):
    a = M.array if isinstance(M, SymIntMatrix) else np.asarray(M, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    try:
        values, vectors, _, _ = kernels.jacobi_eigh(a, tol, JACOBI_MAX_SWEEPS, want_vectors)
    except RuntimeError as exc:
        raise ConvergenceError(str(exc)) from exc
    order = np.argsort(-values, kind="stable")
    values = values[order]
    if group_tol is None:
        group_tol = 1e-6 * max(1.0, float(np.sqrt((a * a).sum())))
    spec = Spectrum(tuple(float(v) for v in values), group_values(values.tolist(), group_tol), group_tol)
    return spec, (vectors[:, order] if vectors is not None else None)


def spectra_equal(a: Spectrum | Sequence[float], b: Spectrum | Sequence[float], tol: float) -> bool:
    """Multiset equality: sorted value vectors agree entrywise within ``tol``."""
    return spectrum_distance(a, b) <= tol


def spectrum_distance(a: Spectrum | Sequence[float], b: Spectrum | Sequence[float]) -> float:
    """Largest entrywise gap between the two sorted value vectors."""
    x = sorted(a.values if isinstance(a, Spectrum) else a)
    y = sorted(b.values if isinstance(b, Spectrum) else b)
    if len(x) != len(y):
        raise ValueError(f"spectra have different lengths ({len(x)} vs {len(y)})")
    return max((abs(p - q) for p, q in zip(x, y)), default=0.0)


def auxiliary_eigenvalues(specL: Spectrum | Sequence[float], tr_avg: Fraction | float) -> list[float]:
    """Eccentricity-Laplacian eigenvalues shifted by the average transmission."""
    shift = float(tr_avg)
    vals = specL.values if isinstance(specL, Spectrum) else specL
    return [v - shift for v in vals]


def energy(values: Iterable[float]) -> float:
    return math.fsum(abs(v) for v in values)


# --------------------------------------------------------------------------
# exact polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients from the leading term down."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[0] == 0:
            c = c[1:]
        object.__setattr__(self, "coeffs", c or (0,))

    @classmethod
    def monomial(cls, degree: int) -> "IntPolynomial":
        return cls((1,) + (0,) * degree)

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """t - root"""
        return cls((1, -root))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls.linear(r)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def taylor_shift(self, x: Fraction | int) -> list[Fraction]:
        """Coefficients (leading first) of p(t + x), exactly."""
        c = [Fraction(v) for v in self.coeffs]
        n = len(c) - 1
        for i in range(n):
            for j in range(1, n - i + 1):
                c[j] += x * c[j - 1]
        return c

    def roots_above(self, x: Fraction | int) -> int:
        """Number of roots greater than ``x``, counted with multiplicity.

        Descartes' sign rule on p(t + x); exact because every root of a real
        symmetric matrix's characteristic polynomial is real.  ``x`` must not
        be a root.
        """
        shifted = self.taylor_shift(Fraction(x))
        if shifted[-1] == 0:
            raise ValueError(f"{x} is a root")
        signs = [c > 0 for c in shifted if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = d - k
            mag = abs(c)
            body = ("" if mag == 1 and p else str(mag)) + ("t" if p else "") + (f"^{p}" if p > 1 else "")
            terms.append(("-" if c < 0 else "+") + " " + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+") else "-" + s[2:]


def char_poly_exact(M: SymIntMatrix | Sequence[Sequence[int]]) -> IntPolynomial:
    """det(tI - M) by the Faddeev-LeVerrier recurrence in exact integers.

    N_1 = I, c_1 = -tr(M); N_k = M N_{k-1} + c_{k-1} I, c_k = -tr(M N_k) / k.
    Each division is exact because the coefficients are integers.
    """
    A = [list(r) for r in (M.entries if isinstance(M, SymIntMatrix) else M)]
    n = len(A)
    coeffs = [1]
    if n == 0:
        return IntPolynomial((1,))
    N = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        # AN = A @ N
        ncols = list(zip(*N))
        AN = [[sum(a * b for a, b in zip(row, col)) for col in ncols] for row in A]
        tr = sum(AN[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("non-integer Faddeev-LeVerrier coefficient")
        coeffs.append(c)
        if k < n:
            for i in range(n):
                AN[i][i] += c
            N = AN
    return IntPolynomial(tuple(coeffs))
