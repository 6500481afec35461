"""BFS distances, eccentricities, vertex classes and the classical graph matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from eccspec import kernels
from eccspec.graph import Graph
from eccspec.matrices import SymIntMatrix


class DisconnectedGraphError(ValueError):
    """The graph is not connected; ``pair`` is a (source, unreached) vertex pair."""

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"graph is disconnected: vertex {pair[1]} is unreachable from vertex {pair[0]}")


@dataclass(frozen=True)
class DistanceProfile:
    dist: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    diameter: int
    radius: int

    @property
    def n(self) -> int:
        return len(self.ecc)

    def distance_matrix(self) -> SymIntMatrix:
        return SymIntMatrix(self.dist)


@dataclass(frozen=True)
class VertexClasses:
    universal: frozenset[int]
    central: frozenset[int]
    periphery: frozenset[int]
    degrees: tuple[int, ...]


def distance_profile(G: Graph) -> DistanceProfile:
    """All-pairs hop distances by BFS from every vertex.

    Raises DisconnectedGraphError when some BFS does not reach every vertex.
    """
    d = kernels.all_pairs_bfs(G.adjacency_array)
    unreached = np.argwhere(d < 0)
    if len(unreached):
        i, j = unreached[0]
        raise DisconnectedGraphError((int(i), int(j)))
    dist = tuple(tuple(int(x) for x in row) for row in d)
    ecc = tuple(max(row) for row in dist)
    return DistanceProfile(dist=dist, ecc=ecc, diameter=max(ecc), radius=min(ecc))


def vertex_classes(G: Graph, dp: DistanceProfile) -> VertexClasses:
    deg = tuple(G.degrees())
    return VertexClasses(
        universal=frozenset(v for v in range(G.n) if deg[v] == G.n - 1),
        central=frozenset(v for v in range(G.n) if dp.ecc[v] == dp.radius),
        periphery=frozenset(v for v in range(G.n) if dp.ecc[v] == dp.diameter),
        degrees=deg,
    )


def adjacency_matrix(G: Graph) -> SymIntMatrix:
    return SymIntMatrix(tuple(tuple(int(G.has_edge(i, j)) for j in range(G.n)) for i in range(G.n)))


def laplacian(G: Graph) -> SymIntMatrix:
    A = adjacency_matrix(G)
    return SymIntMatrix.diagonal(G.degrees()) - A


def signless_laplacian(G: Graph) -> SymIntMatrix:
    A = adjacency_matrix(G)
    return SymIntMatrix.diagonal(G.degrees()) + A


def classical_matrices(G: Graph) -> tuple[SymIntMatrix, SymIntMatrix, SymIntMatrix]:
    """(adjacency, Laplacian D - A, signless Laplacian D + A)."""
    A = adjacency_matrix(G)
    D = SymIntMatrix.diagonal(G.degrees())
    return A, D - A, D + A
