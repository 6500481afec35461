import numpy as np
import pytest

from eccspec import graph as g
from eccspec.linalg import sym_eigenvalues
from eccspec.matrices import SymIntMatrix, ecc_laplacian, ecc_signless_laplacian, eccentricity_matrix
from eccspec.metrics import distance_profile
from eccspec.structure import (
    ecc_bipartition,
    is_ecc_bipartite,
    is_irreducible,
    is_spectrum_symmetric,
    laplacians_similar,
    neg_radius_in_spectrum,
    signature_conjugate,
    support_graph,
)


def E_of(G):
    return eccentricity_matrix(distance_profile(G))


def test_support_graphs():
    assert support_graph(E_of(g.complete(5))) == g.complete(5)
    assert support_graph(E_of(g.cycle(4))).edges() == [(0, 2), (1, 3)]
    assert support_graph(E_of(g.path(4))).edges() == [(0, 2), (0, 3), (1, 3)]


@pytest.mark.parametrize(
    "G, expected",
    [(g.cycle(6), False), (g.cycle(5), True), (g.path(4), True), (g.path(7), True), (g.star(6), True), (g.complete(1), False)],
)
def test_irreducibility(G, expected):
    assert is_irreducible(E_of(G)) is expected


def test_bipartition_p4():
    bp = ecc_bipartition(E_of(g.path(4)))
    assert bp is not None
    assert {frozenset(bp.part_a), frozenset(bp.part_b)} == {frozenset({0, 1}), frozenset({2, 3})}
    E = E_of(g.path(4)).permuted(bp.order)
    assert E.submatrix([0, 1], [0, 1]) == [[0, 0], [0, 0]] and E.submatrix([2, 3], [2, 3]) == [[0, 0], [0, 0]]


def test_bipartition_presence():
    assert ecc_bipartition(E_of(g.cycle(6))) is not None
    assert ecc_bipartition(E_of(g.complete(3))) is None
    assert not is_ecc_bipartite(E_of(g.complete(1)))
    with pytest.raises(ValueError):
        ecc_bipartition(E_of(g.complete(1)))


def test_isolated_support_vertices_go_to_part_a():
    M = SymIntMatrix.from_rows([[0, 0, 0], [0, 0, 2], [0, 2, 0]])
    bp = ecc_bipartition(M)
    assert 0 in bp.part_a and bp.part_b
    assert ecc_bipartition(SymIntMatrix.zeros(3)).part_b


def test_signature_witness():
    for G in (g.path(4), g.cycle(6), g.path(6)):
        E = E_of(G)
        bp = ecc_bipartition(E)
        assert signature_conjugate(ecc_signless_laplacian(E), bp.signature(G.n)) == ecc_laplacian(E)


def test_spectrum_predicates():
    c4 = sym_eigenvalues(E_of(g.cycle(4)))
    k3 = sym_eigenvalues(E_of(g.complete(3)))
    p4 = sym_eigenvalues(E_of(g.path(4)))
    assert np.allclose(c4.values, [2, 2, -2, -2])
    assert is_spectrum_symmetric(c4, 1e-6) and is_spectrum_symmetric(p4, 1e-6)
    assert not is_spectrum_symmetric(k3, 1e-6)
    assert neg_radius_in_spectrum(p4, 1e-6) and not neg_radius_in_spectrum(k3, 1e-6)


def test_laplacian_similarity():
    def spectra(G):
        E = E_of(G)
        return sym_eigenvalues(ecc_laplacian(E)), sym_eigenvalues(ecc_signless_laplacian(E))

    L, Q = spectra(g.cycle(6))
    assert np.allclose(L.values, [6, 6, 6, 0, 0, 0]) and laplacians_similar(L, Q, 1e-6)
    L, Q = spectra(g.complete(3))
    assert np.allclose(L.values, [3, 3, 0]) and np.allclose(Q.values, [4, 1, 1])
    assert not laplacians_similar(L, Q, 1e-6)
    assert laplacians_similar(*spectra(g.path(4)), 1e-6)
