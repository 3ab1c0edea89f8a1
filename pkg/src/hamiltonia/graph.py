"""Immutable simple graphs on at most 64 vertices.

Each vertex's neighbourhood is stored as an integer bitmask, so adjacency
tests and neighbourhood intersections are single machine-word operations
for the graph sizes this package deals with.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedInput, NTooLarge, SelfLoop, VertexOutOfRange

MAX_N = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise NTooLarge(f"n={self.n} outside 1..{MAX_N}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise VertexOutOfRange(f"vertex {v} has a neighbour >= {self.n}")
            if row >> v & 1:
                raise SelfLoop(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        adj = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return Graph(self.n, tuple(adj))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def add_edge(self, u: int, v: int) -> Graph:
        return make_graph(self.n, self.edges() + [(u, v)])

    def remove_vertices(self, mask: int) -> tuple[int, ...]:
        """Adjacency rows with the vertices in ``mask`` deleted (not reindexed)."""
        keep = ~mask
        return tuple(row & keep if not mask >> v & 1 else 0 for v, row in enumerate(self.adj))


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n > MAX_N:
        raise NTooLarge(f"n={n} exceeds {MAX_N}")
    if n < 1:
        raise NTooLarge(f"n={n} must be at least 1")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    return Graph(len(adj), tuple(adj))


def degree_sequence(g: Graph) -> list[int]:
    return [row.bit_count() for row in g.adj]


def is_regular(g: Graph, k: int | None = None) -> bool:
    degs = degree_sequence(g)
    target = degs[0] if k is None else k
    return all(d == target for d in degs)


def component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` through vertices of ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return component_mask(g.adj, 0, full) == full


def _disconnects(g: Graph, removed: int) -> bool:
    rest = ((1 << g.n) - 1) & ~removed
    if not rest:
        return False
    start = (rest & -rest).bit_length() - 1
    return component_mask(g.adj, start, rest) != rest


def is_separator(g: Graph, vertices: Iterable[int]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return _disconnects(g, mask)


def vertex_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose removal disconnects ``g``.

    Complete graphs have no separator and get ``n - 1`` by convention.
    Subsets are tried in increasing size up to ``min degree - 1``, since
    the neighbourhood of a minimum-degree vertex is always a separator in
    a non-complete graph.
    """
    if g.n < 2:
        raise DisconnectedInput("vertex connectivity needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedInput("graph is disconnected")
    if g.num_edges == g.n * (g.n - 1) // 2:
        return g.n - 1
    min_deg = min(degree_sequence(g))
    for size in range(1, min_deg):
        for subset in combinations(range(g.n), size):
            if is_separator(g, subset):
                return size
    return min_deg
