"""Support-graph analysis of eccentricity matrices.

A graph is E-bipartite when some relabeling puts its eccentricity matrix in
the block form ``[[O, B], [B^T, O]]``; that happens exactly when the nonzero
pattern of the matrix (its support graph) is 2-colourable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from eccspec.graph import Graph
from eccspec.linalg import Spectrum, spectra_equal
from eccspec.matrices import SymIntMatrix


@dataclass(frozen=True)
class EccBipartition:
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    @property
    def order(self) -> list[int]:
        """Vertex order that exposes the zero diagonal blocks."""
        return list(self.part_a) + list(self.part_b)

    def signature(self, n: int) -> list[int]:
        """Diagonal of the signature matrix: +1 on part_a, -1 on part_b."""
        sig = [0] * n
        for v in self.part_a:
            sig[v] = 1
        for v in self.part_b:
            sig[v] = -1
        return sig


def support_graph(E: SymIntMatrix) -> Graph:
    return Graph.from_edges(E.n, [(i, j) for i in range(E.n) for j in range(i + 1, E.n) if E[i, j] != 0])


def is_irreducible(E: SymIntMatrix) -> bool:
    """Irreducibility of a symmetric nonnegative matrix = connected support.

    A 1x1 matrix counts as irreducible only when its entry is nonzero, so the
    eccentricity matrix of K_1 is reducible.
    """
    if E.n == 1:
        return E[0, 0] != 0
    return support_graph(E).is_connected()


def ecc_bipartition(E: SymIntMatrix) -> EccBipartition | None:
    """2-colour the support graph by BFS parity, or return None if it has an odd cycle.

    Isolated support vertices go to part_a.
    """
    n = E.n
    if n < 2:
        raise ValueError("E-bipartition needs at least two vertices")
    S = support_graph(E)
    colour = [-1] * n
    for s in range(n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in S.neighbors(u):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    part_a = [v for v in range(n) if colour[v] == 0]
    part_b = [v for v in range(n) if colour[v] == 1]
    if not part_b:
        # all-zero matrix: any nonempty split works
        part_b = [part_a.pop()]
    return EccBipartition(tuple(part_a), tuple(part_b))


def is_ecc_bipartite(E: SymIntMatrix) -> bool:
    return E.n >= 2 and ecc_bipartition(E) is not None


def is_spectrum_symmetric(s: Spectrum, tol: float) -> bool:
    vals = s.values
    n = len(vals)
    return all(abs(vals[i] + vals[n - 1 - i]) <= tol for i in range(n))


def neg_radius_in_spectrum(s: Spectrum, tol: float) -> bool:
    """Whether -rho lies in the spectrum (rho the spectral radius)."""
    return abs(s.smallest + s.spectral_radius) <= tol


def laplacians_similar(specL: Spectrum, specQ: Spectrum, tol: float) -> bool:
    """Similarity of two real symmetric matrices, decided by their spectra."""
    return spectra_equal(specL, specQ, tol)


def signature_conjugate(M: SymIntMatrix, signature: list[int]) -> SymIntMatrix:
    """S M S for the diagonal signature matrix S."""
    n = M.n
    return SymIntMatrix(tuple(tuple(signature[i] * M[i, j] * signature[j] for j in range(n)) for i in range(n)))
