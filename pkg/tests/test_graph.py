import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eccspec import graph as g
from eccspec.graph import Graph, GraphFormatError


def nx_graph(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


# edge lists


def test_edge_list_with_comments_and_duplicates():
    G = g.parse_edge_list("# triangle\n3\n0 1\n1 2  # tail comment\n\n2 0\n1 0\n")
    assert G.n == 3 and G.edges() == [(0, 1), (0, 2), (1, 2)]


def test_edge_list_isolated_single_vertex():
    G = g.parse_edge_list("1\n")
    assert G.n == 1 and G.m == 0


@pytest.mark.parametrize(
    "text",
    ["", "# only a comment\n", "3 4\n", "x\n", "0\n", "3\n0 1 2\n", "3\n0 a\n", "3\n0 3\n", "3\n-1 0\n", "3\n1 1\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        g.parse_edge_list(text)


def test_edge_list_round_trip():
    P = g.petersen()
    assert g.parse_edge_list(g.format_edge_list(P)) == P


# graph6


def test_graph6_known_strings():
    assert g.complete(2).to_graph6() == "A_"
    assert g.cycle(5).to_graph6() == "Dhc"
    assert g.complete(1).to_graph6() == "@"
    assert g.parse_graph6(">>graph6<<Dhc") == g.cycle(5)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_matches_networkx(G):
    assert G.to_graph6() == nx.to_graph6_bytes(nx_graph(G), header=False).decode().strip()
    back = g.parse_graph6(G.to_graph6())
    assert back == G


def test_graph6_decoding_matches_networkx():
    for s in ["IheA@GUAo", "Dhc", "E?Bw", "G~~~~{"]:
        ours = g.parse_graph6(s)
        theirs = nx.from_graph6_bytes(s.encode())
        assert sorted(ours.edges()) == sorted(tuple(sorted(e)) for e in theirs.edges())


@pytest.mark.parametrize("s", ["", "D", "Dhcc", "~?@?", "D h", "?"])
def test_graph6_errors(s):
    with pytest.raises(GraphFormatError):
        g.parse_graph6(s)


def test_graph6_order_limit():
    with pytest.raises(GraphFormatError):
        g.encode_graph6(g.path(63))


# families


def test_family_shapes():
    assert (g.complete(5).m, g.complete_minus_edge(5).m) == (10, 9)
    assert not g.complete_minus_edge(4).has_edge(0, 1)
    K = g.complete_bipartite(2, 3)
    assert K.n == 5 and K.m == 6 and not K.has_edge(0, 1) and not K.has_edge(2, 3)
    assert g.cycle(6).degrees() == [2] * 6
    assert g.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.star(5).degrees() == [4, 1, 1, 1, 1]


def test_petersen_is_networkx_petersen():
    assert nx.is_isomorphic(nx_graph(g.petersen()), nx.petersen_graph())


def test_circulant_c7_12():
    C = g.circulant(7, 1, 2)
    assert C.degrees() == [4] * 7
    assert nx.is_isomorphic(nx_graph(C), nx.circulant_graph(7, [1, 2]))


def test_generate_dispatch_and_errors():
    assert g.generate("complete_bipartite", 2, 3) == g.complete_bipartite(2, 3)
    assert g.generate("petersen") == g.petersen()
    for bad in [("cycle", 2), ("complete", 0), ("complete", 3, 4), ("nope", 3), ("circulant", 7)]:
        with pytest.raises(ValueError):
            g.generate(*bad)


def test_join_complement_union():
    C4 = g.cycle(4)
    W = g.join(C4, g.complete(1))
    assert W.n == 5 and W.m == 8 and W.degrees()[4] == 4
    assert nx.is_isomorphic(nx_graph(g.complement(C4)), nx.complement(nx_graph(C4)))
    U = g.disjoint_union(g.complete(2), g.complete(2))
    assert U.m == 2 and not U.is_connected()


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


# enumeration


def _brute_connected_count(n):
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for k in range(len(pairs) + 1):
        for edges in itertools.combinations(pairs, k):
            H = nx.Graph()
            H.add_nodes_from(range(n))
            H.add_edges_from(edges)
            total += nx.is_connected(H)
    return total


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_connected_counts_match_brute_force(n):
    assert sum(1 for _ in g.connected_masks(n)) == _brute_connected_count(n)


def test_connected_counts_known():
    assert [sum(1 for _ in g.connected_masks(n)) for n in range(1, 7)] == [1, 1, 4, 38, 728, 26704]


def test_enumerated_graphs_are_distinct_and_connected():
    seen = {G.to_graph6() for G in g.enumerate_connected(4)}
    assert len(seen) == 38
    assert all(g.parse_graph6(s).is_connected() for s in seen)


def test_sampling_is_seeded():
    a = list(g.sample_masks(7, 300, seed=42))
    b = list(g.sample_masks(7, 300, seed=42))
    c = list(g.sample_masks(7, 300, seed=43))
    assert a == b and a != c
    assert all(Graph.from_edge_mask(7, m).is_connected() for m in a)


def test_enumeration_errors():
    with pytest.raises(ValueError):
        list(g.enumerate_connected(8))
    with pytest.raises(ValueError):
        list(g.enumerate_connected(3, mode="random"))
