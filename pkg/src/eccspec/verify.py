"""Executable checks of the spectral identities, bounds and equivalences.

Each check takes a :class:`~eccspec.graph.Graph` (or a prepared
:class:`Analysis`, so several checks can share one set of eigensolves) and
returns a :class:`Verdict`.  Checks whose hypotheses do not hold return a
skipped verdict instead of failing.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Iterable

import numpy as np

from eccspec import graph as gmod
from eccspec.graph import Graph
from eccspec.linalg import (
    IntPolynomial,
    Spectrum,
    auxiliary_eigenvalues,
    char_poly_exact,
    energy,
    spectrum_distance,
    sym_eigenvalues,
    sym_eigh,
)
from eccspec.matrices import (
    SymIntMatrix,
    ecc_laplacian,
    ecc_signless_laplacian,
    ecc_stats,
    eccentricity_matrix,
)
from eccspec.metrics import classical_matrices, distance_profile, vertex_classes
from eccspec.structure import (
    ecc_bipartition,
    is_irreducible,
    is_spectrum_symmetric,
    laplacians_similar,
    neg_radius_in_spectrum,
    signature_conjugate,
)

DEFAULT_TOL = 1e-6
CLOSED_FORM_FAMILIES = ("complete", "complete_minus_edge", "complete_bipartite", "cycle")


@dataclass
class Verdict:
    """Outcome of one check on one input.

    ``residual`` is the worst numerical deviation, rescaled to the units of
    ``tolerance`` when a check mixes sub-checks with different tolerances.
    Exact sub-checks contribute 0 when they hold.  ``passed`` is None for
    skipped verdicts.
    """

    check_id: str
    passed: bool | None
    residual: float = 0.0
    tolerance: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)
    skipped_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "passed": self.passed,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "details": self.details,
            "skipped_reason": self.skipped_reason,
        }


class _Tally:
    """Collects sub-check outcomes for one verdict."""

    def __init__(self, check_id: str, tol: float, details: dict[str, Any]):
        self.check_id = check_id
        self.tol = tol
        self.details = details
        self.residual = 0.0
        self.failures: list[str] = []

    def near(self, name: str, deviation: float, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        deviation = float(deviation)
        scaled = deviation * self.tol / tol if tol > 0 else (0.0 if deviation == 0 else math.inf)
        ok = deviation <= tol
        if ok:
            self.residual = max(self.residual, scaled)
        else:
            self.failures.append(f"{name}: deviation {deviation:.3e} > {tol:.3e}")
        return ok

    def exact(self, name: str, ok: bool, note: str = "") -> bool:
        if not ok:
            self.failures.append(f"{name}: {note or 'exact equality failed'}")
        return ok

    def verdict(self) -> Verdict:
        if self.failures:
            self.details["failures"] = self.failures
        return Verdict(self.check_id, not self.failures, self.residual, self.tol, self.details)


def _skip(check_id: str, reason: str, details: dict[str, Any] | None = None) -> Verdict:
    return Verdict(check_id, None, 0.0, 0.0, details or {}, skipped_reason=reason)


class Analysis:
    """Lazily computed matrices and spectra of one connected graph."""

    def __init__(self, G: Graph):
        self.G = G
        self.n = G.n

    @cached_property
    def graph6(self) -> str:
        return self.G.to_graph6() if self.n <= gmod.GRAPH6_MAX_ORDER else ""

    @cached_property
    def profile(self):
        return distance_profile(self.G)

    @cached_property
    def classes(self):
        return vertex_classes(self.G, self.profile)

    @cached_property
    def E(self) -> SymIntMatrix:
        return eccentricity_matrix(self.profile)

    @cached_property
    def stats(self):
        return ecc_stats(self.E)

    @cached_property
    def EL(self) -> SymIntMatrix:
        return ecc_laplacian(self.E, self.stats)

    @cached_property
    def EQ(self) -> SymIntMatrix:
        return ecc_signless_laplacian(self.E, self.stats)

    @cached_property
    def classical(self) -> tuple[SymIntMatrix, SymIntMatrix, SymIntMatrix]:
        return classical_matrices(self.G)

    @cached_property
    def spec_E(self) -> Spectrum:
        return sym_eigenvalues(self.E)

    @cached_property
    def spec_L(self) -> Spectrum:
        return sym_eigenvalues(self.EL)

    @cached_property
    def spec_Q(self) -> Spectrum:
        return sym_eigenvalues(self.EQ)

    @cached_property
    def eig_adjacency(self) -> tuple[Spectrum, np.ndarray]:
        return sym_eigh(self.classical[0])

    @cached_property
    def eig_laplacian(self) -> tuple[Spectrum, np.ndarray]:
        return sym_eigh(self.classical[1])

    @cached_property
    def eig_signless(self) -> tuple[Spectrum, np.ndarray]:
        return sym_eigh(self.classical[2])

    @cached_property
    def irreducible(self) -> bool:
        return is_irreducible(self.E)

    @cached_property
    def bipartition(self):
        return ecc_bipartition(self.E) if self.n >= 2 else None

    def base_details(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "n": self.n, "m": self.G.m}


def analyze(G: Graph | Analysis) -> Analysis:
    return G if isinstance(G, Analysis) else Analysis(G)


def _residual(M: np.ndarray, v: np.ndarray, lam: float) -> float:
    v = np.asarray(v, dtype=np.float64)
    v = v / np.linalg.norm(v)
    return float(np.linalg.norm(M @ v - lam * v))


# --------------------------------------------------------------------------
# trace identities


def check_trace_identities(G: Graph | Analysis) -> Verdict:
    """Sum and sum-of-squares identities for E, E^L and the auxiliary eigenvalues."""
    a = analyze(G)
    n = a.n
    st = a.stats
    tol = 1e-6 * n * a.E.frobenius_norm()
    xi = a.spec_E.values
    xl = a.spec_L.values
    eta = auxiliary_eigenvalues(xl, st.tr_avg)
    e = st.sq_sum
    tr2 = sum(t * t for t in st.tr)
    total = sum(st.tr)
    big_e = Fraction(e) + Fraction(tr2, 2) - Fraction(total * total, 2 * n)
    details = a.base_details()
    details.update(e=e, wiener=st.wiener, sum_tr_sq=tr2, E_aux=str(big_e))
    t = _Tally("trace", tol, details)
    t.near("sum_xi", abs(math.fsum(xi)))
    t.near("sum_xi_sq", abs(math.fsum(x * x for x in xi) - 2 * e))
    t.near("sum_xiL", abs(math.fsum(xl) - 2 * st.wiener))
    t.near("sum_xiL_sq", abs(math.fsum(x * x for x in xl) - (2 * e + tr2)))
    t.near("sum_eta", abs(math.fsum(eta)))
    t.near("sum_eta_sq", abs(math.fsum(x * x for x in eta) - float(2 * big_e)))
    return t.verdict()


# --------------------------------------------------------------------------
# signless Laplacian bounds


def check_signless_bounds(G: Graph | Analysis) -> Verdict:
    """2 tr_min <= 2 tr_avg <= rho(E^Q) <= 2 tr_max, the irreducible refinement,
    and: rho(E^Q) = (2/n) trace(E^Q) iff E-transmission regular."""
    a = analyze(G)
    st = a.stats
    tol = 1e-8 * max(1.0, a.EQ.frobenius_norm())
    q1 = a.spec_Q.largest
    avg2 = 2 * st.tr_avg
    trace_bound = Fraction(2 * a.EQ.trace(), a.n)
    details = a.base_details()
    details.update(
        tr_min=st.tr_min,
        tr_max=st.tr_max,
        tr_avg=str(st.tr_avg),
        xi1_Q=q1,
        irreducible=a.irreducible,
        regular_degree=st.regular_degree,
    )
    t = _Tally("bounds", tol, details)
    t.exact("2tr_min<=2tr_avg", 2 * st.tr_min <= avg2)
    t.near("2tr_avg<=xi1Q", max(0.0, float(avg2) - q1))
    t.near("xi1Q<=2tr_max", max(0.0, q1 - 2 * st.tr_max))
    t.near("tr_max<=xi1Q", max(0.0, st.tr_max - q1))
    if a.irreducible:
        gap = q1 - st.tr_max
        details["strict_gap"] = gap
        t.exact("tr_max<xi1Q", gap > tol, f"gap {gap:.3e} not above tolerance")
    equal = abs(q1 - float(trace_bound)) <= tol
    regular = st.regular_degree is not None
    details["xi1Q_equals_2trace_over_n"] = equal
    if regular:
        t.near("regular=>equality", abs(q1 - float(trace_bound)))
    else:
        t.exact("equality=>regular", not equal, "largest eigenvalue meets (2/n) trace on a non-regular graph")
    return t.verdict()


# --------------------------------------------------------------------------
# closed forms


def closed_form_polynomials(family: str, *params: int) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    """Expanded (E, E^L, E^Q) characteristic polynomials for the exact families."""
    P = IntPolynomial
    t = P.monomial(1)
    if family == "complete":
        (n,) = params
        return (
            P.linear(n - 1) * P.linear(-1) ** (n - 1),
            t * P.linear(n) ** (n - 1),
            P.linear(2 * n - 2) * P.linear(n - 2) ** (n - 1),
        )
    if family == "complete_minus_edge":
        (n,) = params
        return (
            P((1, -(n - 1), -2)) * P.linear(-2) * P.linear(-1) ** (n - 3),
            t * P.linear(n + 2) * P.linear(n) ** (n - 2),
            P((1, -(3 * n - 2), 2 * n * n - 2 * n - 4)) * P.linear(n - 2) ** (n - 2),
        )
    if family == "complete_bipartite":
        m, n = params
        return (
            P.linear(2 * m - 2) * P.linear(2 * n - 2) * P.linear(-2) ** (m + n - 2),
            t**2 * P.linear(2 * m) ** (m - 1) * P.linear(2 * n) ** (n - 1),
            P.linear(4 * m - 4) * P.linear(4 * n - 4) * P.linear(2 * m - 4) ** (m - 1) * P.linear(2 * n - 4) ** (n - 1),
        )
    if family == "cycle":
        (n,) = params
        if n % 2:
            raise ValueError("odd cycles have no integer closed form")
        k = n // 2
        LQ = t**k * P.linear(2 * k) ** k
        return (P((1, 0, -k * k)) ** k, LQ, LQ)
    raise ValueError(f"no closed form for family {family!r}")


def odd_cycle_spectra(n: int) -> tuple[list[float], list[float], list[float]]:
    k = (n - 1) // 2
    c = [2 * k * math.cos(2 * math.pi * i / n) for i in range(1, n + 1)]
    return c, [2 * k - x for x in c], [2 * k + x for x in c]


def _closed_form_skip_reason(family: str, params: tuple[int, ...]) -> str | None:
    if family not in CLOSED_FORM_FAMILIES:
        return f"no closed form for family {family!r}"
    need = 2 if family == "complete_bipartite" else 1
    if len(params) != need:
        return f"family {family!r} takes {need} parameter(s)"
    if family == "complete" and params[0] < 1:
        return "K_n needs n >= 1"
    if family == "complete_minus_edge" and params[0] < 3:
        return "K_n - e needs n >= 3"
    if family == "complete_bipartite" and (min(params) < 1 or 1 in params):
        return "K_{m,n} formula needs m, n != 1"
    if family == "cycle" and params[0] < 3:
        return "C_n needs n >= 3"
    return None


def check_closed_forms(family: str, *params: int) -> Verdict:
    """Exact characteristic polynomials against the family formulas.

    Odd cycles have trigonometric roots and are compared numerically (1e-8).
    """
    reason = _closed_form_skip_reason(family, params)
    details: dict[str, Any] = {"family": family, "params": list(params)}
    if reason:
        return _skip("closed-forms", reason, details)
    G = gmod.generate(family, *params)
    a = Analysis(G)
    details.update(a.base_details())
    if family == "cycle" and params[0] % 2:
        t = _Tally("closed-forms", 1e-8, details)
        for name, spec, expected in zip(("E", "EL", "EQ"), (a.spec_E, a.spec_L, a.spec_Q), odd_cycle_spectra(params[0])):
            t.near(f"spectrum_{name}", spectrum_distance(spec, expected))
        return t.verdict()
    t = _Tally("closed-forms", 0.0, details)
    for name, M, expected in zip(("E", "EL", "EQ"), (a.E, a.EL, a.EQ), closed_form_polynomials(family, *params)):
        actual = char_poly_exact(M)
        ok = actual == expected
        if not ok:
            details[f"poly_{name}"] = {"expected": [str(c) for c in expected.coeffs], "actual": [str(c) for c in actual.coeffs]}
        t.exact(f"poly_{name}", ok, "characteristic polynomial differs from closed form")
    return t.verdict()


# --------------------------------------------------------------------------
# E-transmission regular graphs


def check_transmission_regular_correspondence(G: Graph | Analysis, tol: float = DEFAULT_TOL) -> Verdict:
    """E^L and E^Q spectra are k - xi and k + xi; E-energy equals E^L-energy."""
    a = analyze(G)
    k = a.stats.regular_degree
    if k is None:
        return _skip("regular", "graph is not E-transmission regular", a.base_details())
    xi = a.spec_E.values
    details = a.base_details()
    details["degree"] = k
    t = _Tally("regular", tol, details)
    t.near("largest_xi_is_degree", abs(xi[0] - k))
    t.near("spectrum_EL", spectrum_distance(a.spec_L, [k - x for x in xi]))
    t.near("spectrum_EQ", spectrum_distance(a.spec_Q, [k + x for x in xi]))
    e_energy = energy(xi)
    l_energy = energy(auxiliary_eigenvalues(a.spec_L, a.stats.tr_avg))
    details.update(energy_E=e_energy, energy_EL=l_energy)
    t.near("energy", abs(e_energy - l_energy))
    return t.verdict()


# --------------------------------------------------------------------------
# G v K_1 for regular diameter-2 G


def join_quadratic(n: int, r: int) -> tuple[int, int, int]:
    """(b, c, disc) of t^2 - b t + c with b = 5n - 4r - 3, c = 4n(n - r - 1)."""
    b = 5 * n - 4 * r - 3
    c = 4 * n * (n - r - 1)
    return b, c, b * b - 4 * c


def _quadratic_roots(b: int, c: int, disc: int) -> tuple[float, float, bool]:
    s = math.isqrt(disc)
    if s * s == disc:
        return (b + s) / 2, (b - s) / 2, True
    root = math.sqrt(disc)
    return (b + root) / 2, (b - root) / 2, False


def check_join_spectra(G: Graph | Analysis, tol: float = DEFAULT_TOL) -> Verdict:
    """Spectra and block eigenvectors of E, E^L, E^Q of G v K_1 for r-regular G of diameter 2."""
    a = analyze(G)
    G = a.G
    if not G.is_regular():
        return _skip("join", "G is not regular", a.base_details())
    if a.profile.diameter != 2:
        return _skip("join", f"G has diameter {a.profile.diameter}, not 2", a.base_details())
    n = a.n
    r = G.degrees()[0]
    H = Analysis(gmod.join(G, gmod.complete(1)))
    b, c, disc = join_quadratic(n, r)
    t1, t2, rational = _quadratic_roots(b, c, disc)
    details = a.base_details()
    details.update(r=r, join_graph6=H.graph6, quadratic={"b": b, "c": c, "disc": disc}, t1=t1, t2=t2)
    if not t1 > n:
        return _skip("join", "larger quadratic root does not exceed n; alpha_1 undefined", details)
    scale_L = H.EL.frobenius_norm()
    scale_Q = H.EQ.frobenius_norm()
    t = _Tally("join", tol, details)

    # E(G v K_1) = [[2 A(complement G), 1], [1^T, 0]]
    Abar = np.array(gmod.complement(G).adjacency_array, dtype=np.int64)
    expected_E = np.zeros((n + 1, n + 1), dtype=np.int64)
    expected_E[:n, :n] = 2 * Abar
    expected_E[:n, n] = expected_E[n, :n] = 1
    t.exact("apex_block_matrix", np.array_equal(np.array(H.E.entries, dtype=np.int64), expected_E))

    # quadratic roots: exact when the discriminant is a perfect square
    if rational:
        s = math.isqrt(disc)
        r1, r2 = Fraction(b + s, 2), Fraction(b - s, 2)
        t.exact("quadratic_roots", r1 + r2 == b and r1 * r2 == c and r1 * r1 - b * r1 + c == 0)
    else:
        t.near("quadratic_roots", max(abs(t1 + t2 - b), abs(t1 * t2 - c) / max(1, abs(c))))

    lam, _ = a.eig_adjacency
    mu, U = a.eig_laplacian
    q, Qv = a.eig_signless
    base = n - r - 1
    # apex/ones block: lambda^2 - 2(n-r-1) lambda - n = 0
    spread = math.sqrt(base * base + n)
    exp_E = [base + spread, base - spread] + [-2 * (x + 1) for x in lam.values[1:]]
    t.near("spectrum_E", spectrum_distance(H.spec_E, exp_E))
    exp_L = [2 * n + 1 - 2 * x for x in mu.values[:-1]] + [0.0, n + 1.0]
    t.near("spectrum_EL", spectrum_distance(H.spec_L, exp_L))
    exp_Q = [2 * n - 3 - 2 * x for x in q.values[1:]] + [t1, t2]
    t.near("spectrum_EQ", spectrum_distance(H.spec_Q, exp_Q))

    # block eigenvectors
    ML, MQ = H.EL.array, H.EQ.array
    worst_L = 0.0
    for i in range(n - 1):
        worst_L = max(worst_L, _residual(ML, np.append(U[:, i], 0.0), 2 * n + 1 - 2 * mu.values[i]))
    ones = np.ones(n)
    worst_L = max(worst_L, _residual(ML, np.append(ones, 1.0), 0.0))
    worst_L = max(worst_L, _residual(ML, np.append(ones, -float(n)), n + 1.0))
    t.near("eigenvectors_EL", worst_L, tol * scale_L)
    alpha1 = n / (t1 - n)
    alpha2 = -n / alpha1
    worst_Q = 0.0
    for i in range(1, n):
        worst_Q = max(worst_Q, _residual(MQ, np.append(Qv[:, i], 0.0), 2 * n - 3 - 2 * q.values[i]))
    worst_Q = max(worst_Q, _residual(MQ, np.append(ones, alpha1), t1))
    worst_Q = max(worst_Q, _residual(MQ, np.append(ones, alpha2), t2))
    t.near("eigenvectors_EQ", worst_Q, tol * scale_Q)
    details.update(alpha1=alpha1, alpha2=alpha2, eigvec_residual_EL=worst_L, eigvec_residual_EQ=worst_Q)

    if 2 * r == n - 1:
        details["balanced"] = True
        t.exact("join_regular_degree_n", H.stats.regular_degree == n, f"E-transmission degree {H.stats.regular_degree}")
        t.exact("roots_2n_and_n-1", rational and (t1, t2) == (2 * n, n - 1), f"roots {t1}, {t2}")
    return t.verdict()


# --------------------------------------------------------------------------
# diameter two


def diameter2_block_formula(G: Graph, universal: Iterable[int]) -> tuple[list[int], SymIntMatrix, SymIntMatrix]:
    """Universal-first order and the predicted E and E^L in that order.

    E   = [[J - I, J], [J, 2J - 2I - 2A(G')]]
    E^L = [[nI - J, -J], [-J, (2n - u)I - 2J - 2L(G')]]
    with G' the subgraph induced on the non-universal vertices.
    """
    n = G.n
    U = sorted(universal)
    rest = [v for v in range(n) if v not in set(U)]
    u = len(U)
    Gp = G.induced(rest)
    Ap = Gp.adjacency_array.astype(np.int64)
    Lp = np.diag(Ap.sum(axis=1)) - Ap
    k = n - u
    I_u, J_u = np.eye(u, dtype=np.int64), np.ones((u, u), dtype=np.int64)
    I_k, J_k = np.eye(k, dtype=np.int64), np.ones((k, k), dtype=np.int64)
    J_uk = np.ones((u, k), dtype=np.int64)
    E = np.block([[J_u - I_u, J_uk], [J_uk.T, 2 * J_k - 2 * I_k - 2 * Ap]])
    EL = np.block([[n * I_u - J_u, -J_uk], [-J_uk.T, (2 * n - u) * I_k - 2 * J_k - 2 * Lp]])
    return U + rest, SymIntMatrix(E.tolist()), SymIntMatrix(EL.tolist())


def check_diameter2_structure(G: Graph | Analysis, tol: float = DEFAULT_TOL) -> Verdict:
    """Block structure of E^L for diameter 2, and the Laplacian correspondences
    when there is no universal vertex."""
    a = analyze(G)
    if a.profile.diameter != 2:
        return _skip("diameter2", f"diameter is {a.profile.diameter}, not 2", a.base_details())
    G = a.G
    n = a.n
    U = a.classes.universal
    details = a.base_details()
    details["universal"] = sorted(U)
    t = _Tally("diameter2", tol, details)
    order, E_pred, EL_pred = diameter2_block_formula(G, U)
    t.exact("block_E", a.E.permuted(order) == E_pred)
    t.exact("block_EL", a.EL.permuted(order) == EL_pred)
    if U:
        return t.verdict()

    Lbar = classical_matrices(gmod.complement(G))[1]
    t.exact("complement_laplacian", Lbar.scale(2) == a.EL, "2 L(complement) != E^L")
    mu, X = a.eig_laplacian
    t.near("spectrum_EL", spectrum_distance(a.spec_L, [2 * n - 2 * x for x in mu.values[:-1]] + [0.0]))
    ML = a.EL.array
    worst = max((_residual(ML, X[:, i], 2 * n - 2 * mu.values[i]) for i in range(n - 1)), default=0.0)
    t.exact("EL_ones_kernel", all(s == 0 for s in a.EL.row_sums()))
    t.near("eigenvectors_EL", worst, tol * a.EL.frobenius_norm())
    details["eigvec_residual_EL"] = worst
    if G.is_regular():
        r = G.degrees()[0]
        q, Y = a.eig_signless
        top = 4 * (n - r - 1)
        details["r"] = r
        t.near("spectrum_EQ", spectrum_distance(a.spec_Q, [float(top)] + [2 * n - 4 - 2 * x for x in q.values[1:]]))
        MQ = a.EQ.array
        worstQ = max((_residual(MQ, Y[:, i], 2 * n - 4 - 2 * q.values[i]) for i in range(1, n)), default=0.0)
        t.exact("EQ_ones_eigenvector", all(s == top for s in a.EQ.row_sums()))
        t.near("eigenvectors_EQ", worstQ, tol * a.EQ.frobenius_norm())
        details["eigvec_residual_EQ"] = worstQ
    return t.verdict()


# --------------------------------------------------------------------------
# E-bipartite characterisation


def bipartite_predicates(a: Analysis, tol: float = DEFAULT_TOL) -> dict[str, bool]:
    return {
        "bipartite": a.bipartition is not None,
        "symmetric": is_spectrum_symmetric(a.spec_E, tol),
        "neg_radius": neg_radius_in_spectrum(a.spec_E, tol),
        "similar": laplacians_similar(a.spec_L, a.spec_Q, tol),
    }


def check_ecc_bipartite_equivalences(G: Graph | Analysis, tol: float = DEFAULT_TOL) -> Verdict:
    """For irreducible E all four predicates agree; otherwise only
    bipartite => symmetric and bipartite => similar are required."""
    a = analyze(G)
    preds = bipartite_predicates(a, tol)
    details = a.base_details()
    details.update(irreducible=a.irreducible, predicates=preds)
    t = _Tally("bipartite", tol, details)
    if a.bipartition is not None:
        bp = a.bipartition
        details["partition"] = [list(bp.part_a), list(bp.part_b)]
        P = a.E.permuted(bp.order)
        ka = len(bp.part_a)
        zero_blocks = all(P[i, j] == 0 for i in range(a.n) for j in range(a.n) if (i < ka) == (j < ka))
        t.exact("zero_diagonal_blocks", zero_blocks)
        t.exact("signature_similarity", signature_conjugate(a.EQ, bp.signature(a.n)) == a.EL, "S E^Q S != E^L")
    if a.irreducible:
        t.exact("all_equal", len(set(preds.values())) == 1, f"pattern {preds}")
    elif preds["bipartite"]:
        t.exact("bipartite=>symmetric", preds["symmetric"])
        t.exact("bipartite=>similar", preds["similar"])
    return t.verdict()


# --------------------------------------------------------------------------
# matrix invariants


def check_matrix_invariants(G: Graph | Analysis) -> Verdict:
    """Structural facts about E, E^L, E^Q that must hold for every connected graph."""
    a = analyze(G)
    n = a.n
    E, L, Q = a.E, a.EL, a.EQ
    dp = a.profile
    tol = 1e-8 * max(1.0, Q.frobenius_norm())
    t = _Tally("invariants", tol, a.base_details())
    t.exact("zero_diagonal", all(E[i, i] == 0 for i in range(n)))
    if n > 1:
        t.exact("rows_nonzero", all(any(row) for row in E.entries))
    t.exact(
        "entries_are_distances",
        all(E[i, j] == 0 or (E[i, j] == dp.dist[i][j] and E[i, j] >= dp.radius) for i in range(n) for j in range(n)),
    )
    t.exact("L_plus_Q", L + Q == SymIntMatrix.diagonal(a.stats.tr).scale(2))
    t.exact("Q_minus_L", Q - L == E.scale(2))
    t.exact("L_rows_zero", all(s == 0 for s in L.row_sums()))
    t.near("L_psd", max(0.0, -a.spec_L.smallest))
    t.near("Q_psd", max(0.0, -a.spec_Q.smallest))
    t.exact("radius_diameter", dp.radius <= dp.diameter <= 2 * dp.radius)
    t.exact("diameter_one_iff_complete", (dp.diameter == 1) == (a.G.m == n * (n - 1) // 2) or n == 1)
    if dp.diameter == 2 and not a.classes.universal:
        A = classical_matrices(a.G)[0]
        expected = (SymIntMatrix.ones(n) - SymIntMatrix.identity(n) - A).scale(2)
        t.exact("diameter2_E", E == expected, "E != 2(J - I - A)")
    return t.verdict()


GRAPH_CHECKS: dict[str, Callable[[Graph | Analysis], Verdict]] = {
    "trace": check_trace_identities,
    "bounds": check_signless_bounds,
    "regular": check_transmission_regular_correspondence,
    "join": check_join_spectra,
    "diameter2": check_diameter2_structure,
    "bipartite": check_ecc_bipartite_equivalences,
    "invariants": check_matrix_invariants,
}
CHECK_IDS = tuple(GRAPH_CHECKS) + ("closed-forms",)


# checks whose spectral tolerance can be overridden; the rest scale their own
TUNABLE_CHECKS = frozenset({"regular", "join", "diameter2", "bipartite"})


def run_checks(G: Graph | Analysis, checks: Iterable[str] | None = None, tol: float | None = None) -> list[Verdict]:
    a = analyze(G)
    out = []
    for cid in checks or GRAPH_CHECKS:
        if cid not in GRAPH_CHECKS:
            raise KeyError(f"unknown check id {cid!r}")
        try:
            if tol is not None and cid in TUNABLE_CHECKS:
                out.append(GRAPH_CHECKS[cid](a, tol=tol))
            else:
                out.append(GRAPH_CHECKS[cid](a))
        except Exception as exc:  # recorded, never fatal inside a sweep
            out.append(Verdict(cid, False, 0.0, 0.0, {**a.base_details(), "error": f"{type(exc).__name__}: {exc}"}))
    return out


# --------------------------------------------------------------------------
# sweeps


@dataclass
class CheckSummary:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    worst_residual_ratio: float = 0.0

    def add(self, v: Verdict) -> None:
        if v.skipped:
            self.skipped += 1
        elif v.passed:
            self.passed += 1
            if v.tolerance > 0:
                self.worst_residual_ratio = max(self.worst_residual_ratio, v.residual / v.tolerance)
        else:
            self.failed += 1

    def merge(self, other: "CheckSummary") -> None:
        self.passed += other.passed
        self.failed += other.failed
        self.skipped += other.skipped
        self.worst_residual_ratio = max(self.worst_residual_ratio, other.worst_residual_ratio)


@dataclass
class SweepReport:
    n_max: int
    mode: str
    seed: int | None
    count: int | None
    checks: list[str]
    graph_counts: dict[int, int] = field(default_factory=dict)
    summary: dict[str, CheckSummary] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)
    reducible_patterns: dict[str, int] = field(default_factory=dict)

    @property
    def total_graphs(self) -> int:
        return sum(self.graph_counts.values())

    @property
    def total_failures(self) -> int:
        return sum(s.failed for s in self.summary.values())

    @property
    def ok(self) -> bool:
        return self.total_failures == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "mode": self.mode,
            "seed": self.seed,
            "count": self.count,
            "checks": self.checks,
            "graph_counts": {str(k): v for k, v in sorted(self.graph_counts.items())},
            "total_graphs": self.total_graphs,
            "summary": {
                cid: {
                    "passed": s.passed,
                    "failed": s.failed,
                    "skipped": s.skipped,
                    "worst_residual_ratio": s.worst_residual_ratio,
                }
                for cid, s in sorted(self.summary.items())
            },
            "failures": self.failures,
            "reducible_bipartite_patterns": dict(sorted(self.reducible_patterns.items())),
            "total_failures": self.total_failures,
        }


def _pattern_key(preds: dict[str, bool]) -> str:
    return ",".join(f"{k}={'T' if v else 'F'}" for k, v in preds.items())


def _sweep_chunk(args: tuple[int, list[int], list[str]]):
    n, masks, checks = args
    summary = {cid: CheckSummary() for cid in checks}
    failures = []
    patterns: dict[str, int] = {}
    for mask in masks:
        a = Analysis(Graph.from_edge_mask(n, mask))
        for v in run_checks(a, checks):
            summary[v.check_id].add(v)
            if v.passed is False:
                failures.append({"graph6": a.graph6, "check_id": v.check_id, "residual": v.residual, "details": v.details})
            if v.check_id == "bipartite" and not v.details.get("irreducible", True):
                key = _pattern_key(v.details["predicates"])
                patterns[key] = patterns.get(key, 0) + 1
    return n, len(masks), summary, failures, patterns


def _chunks(seq: list[int], size: int) -> Iterable[list[int]]:
    for i in range(0, len(seq), size):
        yield seq[i:i + size]


def run_sweep(
    n_max: int,
    checks: Iterable[str] | None = None,
    mode: str = "exhaustive",
    count: int = 0,
    seed: int = 0,
    jobs: int = 1,
    n_min: int = 1,
) -> SweepReport:
    """Run graph checks over every connected graph of order n_min..n_max.

    Exhaustive mode needs n_max <= 6.  Sample mode enumerates orders below
    n_max exhaustively (capped at 6) and draws ``count`` uniform labeled
    graphs of order n_max from a PCG64 generator seeded with ``seed``.
    """
    checks = list(checks or GRAPH_CHECKS)
    for cid in checks:
        if cid not in GRAPH_CHECKS:
            raise KeyError(f"unknown check id {cid!r}")
    if n_max < n_min or n_min < 1:
        raise ValueError(f"invalid order range {n_min}..{n_max}")
    if mode == "exhaustive" and n_max > 6:
        raise ValueError("exhaustive sweeps support n_max <= 6; use sample mode beyond")
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")

    work: list[tuple[int, list[int], list[str]]] = []
    for n in range(n_min, n_max + 1):
        if mode == "sample" and n == n_max:
            masks = list(gmod.sample_masks(n, count, seed))
        elif n <= 6:
            masks = list(gmod.connected_masks(n))
        else:
            continue
        if not masks:
            work.append((n, [], checks))
        for chunk in _chunks(masks, 2000):
            work.append((n, chunk, checks))

    report = SweepReport(
        n_max=n_max,
        mode=mode,
        seed=seed if mode == "sample" else None,
        count=count if mode == "sample" else None,
        checks=checks,
        summary={cid: CheckSummary() for cid in checks},
    )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, work))
    else:
        results = [_sweep_chunk(w) for w in work]
    for n, ngraphs, summary, failures, patterns in results:
        report.graph_counts[n] = report.graph_counts.get(n, 0) + ngraphs
        for cid, s in summary.items():
            report.summary[cid].merge(s)
        report.failures.extend(failures)
        for k, v in patterns.items():
            report.reducible_patterns[k] = report.reducible_patterns.get(k, 0) + v
    report.failures.sort(key=lambda f: (f["graph6"], f["check_id"]))
    return report
