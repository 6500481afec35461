"""Simple undirected graphs, their text formats, and the standard families.

Graphs are stored as dense bit rows: ``rows[i]`` is an integer whose bit ``j``
is set iff vertices ``i`` and ``j`` are adjacent.  Vertices are ``0..n-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

GRAPH6_MAX_ORDER = 62
EXHAUSTIVE_MAX_ORDER = 7

FAMILIES = (
    "complete",
    "complete_minus_edge",
    "complete_bipartite",
    "cycle",
    "path",
    "star",
    "petersen",
    "circulant",
)


class GraphFormatError(ValueError):
    """Raised for malformed edge lists or graph6 strings."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph order must be positive, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} references vertices outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edges are the set bits of ``mask`` over :func:`pair_order`."""
        rows = [0] * n
        for k, (u, v) in enumerate(pair_order(n)):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def degrees(self) -> list[int]:
        return [bin(r).count("1") for r in self.rows]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def is_connected(self) -> bool:
        return _reach(self.rows, 0) == (1 << self.n) - 1

    @cached_property
    def adjacency_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        a.setflags(write=False)
        return a

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = list(vertices)
        index = {v: k for k, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def relabel(self, order: list[int]) -> "Graph":
        """Graph with new vertex ``k`` playing the role of old vertex ``order[k]``."""
        index = {old: new for new, old in enumerate(order)}
        return Graph.from_edges(self.n, [(index[u], index[v]) for u, v in self.edges()])

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={self.to_graph6() if self.n <= GRAPH6_MAX_ORDER else '-'})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _reach(rows: tuple[int, ...] | list[int], source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


# --------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by one ``u v`` edge per line; ``#`` starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 1:
        raise GraphFormatError(f"first line must hold only the vertex count, got {lines[0]!r}")
    try:
        n = int(head[0])
    except ValueError:
        raise GraphFormatError(f"bad vertex count {head[0]!r}") from None
    if n < 1:
        raise GraphFormatError(f"vertex count must be at least 1, got {n}")
    edges = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge line {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {line!r} (n={n})")
        if u == v:
            raise GraphFormatError(f"loop edge {line!r}")
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def format_edge_list(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges()]) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (orders up to 62).

    Padding bits in the final byte are ignored.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        raise GraphFormatError("long-form graph6 (n > 62) is not supported")
    n = ord(s[0]) - 63
    if n < 1:
        raise GraphFormatError("graph6 order must be at least 1")
    pairs = pair_order(n)
    nbytes = (len(pairs) + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise GraphFormatError(f"truncated graph6 string: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise GraphFormatError(f"trailing data in graph6 string: expected {nbytes} data bytes, got {len(body)}")
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        byte = ord(body[k // 6]) - 63
        if byte >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def encode_graph6(G: Graph) -> str:
    if G.n > GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}")
    pairs = pair_order(G.n)
    out = [chr(G.n + 63)]
    for start in range(0, len(pairs), 6):
        byte = 0
        for k, (i, j) in enumerate(pairs[start:start + 6]):
            if G.has_edge(i, j):
                byte |= 1 << (5 - k)
        out.append(chr(byte + 63))
    return "".join(out)


# --------------------------------------------------------------------------
# constructions


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise ValueError("complete_minus_edge needs n >= 2")
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if e != (0, 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs m, n >= 1")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1}: centre 0 joined to leaves 1..n-1."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def circulant(n: int, *jumps: int) -> Graph:
    """Circulant graph C_n(jumps): i adjacent to i +- j (mod n) for each jump j."""
    if n < 1 or not jumps:
        raise ValueError("circulant needs n >= 1 and at least one jump")
    edges = set()
    for i in range(n):
        for j in jumps:
            k = (i + j) % n
            if k != i:
                edges.add((min(i, k), max(i, k)))
    return Graph.from_edges(n, sorted(edges))


_ARITY = {
    "complete": 1,
    "complete_minus_edge": 1,
    "complete_bipartite": 2,
    "cycle": 1,
    "path": 1,
    "star": 1,
    "petersen": 0,
}


def generate(family: str, *params: int) -> Graph:
    """Build a named graph family member, e.g. ``generate("complete_bipartite", 2, 3)``."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "circulant":
        if len(params) < 2:
            raise ValueError("circulant takes n followed by one or more jumps")
        return circulant(*params)
    if len(params) != _ARITY[family]:
        raise ValueError(f"family {family!r} takes {_ARITY[family]} parameter(s), got {len(params)}")
    builder = {
        "complete": complete,
        "complete_minus_edge": complete_minus_edge,
        "complete_bipartite": complete_bipartite,
        "cycle": cycle,
        "path": path,
        "star": star,
        "petersen": petersen,
    }[family]
    if family == "complete" and params[0] < 1:
        raise ValueError("complete needs n >= 1")
    return builder(*params)


def join(G: Graph, H: Graph) -> Graph:
    """G v H; G keeps labels 0..n_G-1, H is shifted by n_G."""
    shift = G.n
    edges = G.edges() + [(u + shift, v + shift) for u, v in H.edges()]
    edges += [(u, shift + v) for u in range(G.n) for v in range(H.n)]
    return Graph.from_edges(G.n + H.n, edges)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(G.rows)))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return Graph.from_edges(G.n + H.n, G.edges() + [(u + shift, v + shift) for u, v in H.edges()])


# --------------------------------------------------------------------------
# enumeration


def connected_masks(n: int) -> Iterator[int]:
    """Edge masks (over :func:`pair_order`) of all connected labeled graphs on n vertices."""
    if not 1 <= n <= EXHAUSTIVE_MAX_ORDER:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_MAX_ORDER}, got {n}")
    pairs = pair_order(n)
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if _reach(rows, 0) == full:
            yield mask


def sample_masks(n: int, count: int, seed: int) -> Iterator[int]:
    """Uniform random labeled graphs on n vertices (as edge masks), connected ones only."""
    if n < 1:
        raise ValueError("n must be positive")
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = np.random.default_rng(seed)
    pairs = pair_order(n)
    npairs = len(pairs)
    full = (1 << n) - 1
    # one fair coin per vertex pair
    bits = rng.integers(0, 2, size=(count, npairs), dtype=np.uint8)
    for draw in bits:
        mask = int("".join("1" if b else "0" for b in draw[::-1]) or "0", 2)
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if _reach(rows, 0) == full:
            yield mask


def enumerate_connected(
    n: int, mode: str = "exhaustive", count: int = 0, seed: int = 0
) -> Iterator[Graph]:
    """Stream connected labeled graphs on ``n`` vertices.

    ``mode="exhaustive"`` yields each connected labeled graph exactly once
    (n <= 7).  ``mode="sample"`` draws ``count`` uniform labeled graphs with a
    seeded PCG64 generator and yields the connected ones.
    """
    if mode == "exhaustive":
        masks = connected_masks(n)
    elif mode == "sample":
        masks = sample_masks(n, count, seed)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    for mask in masks:
        yield Graph.from_edge_mask(n, mask)
