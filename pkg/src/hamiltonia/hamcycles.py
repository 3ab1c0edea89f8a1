"""Exact Hamiltonian cycle counting.

`hc_count` is a depth-first path extension from a fixed anchor vertex.
Each undirected cycle is counted once by requiring the vertex after the
anchor to be smaller than the vertex closing the cycle.  A branch is
abandoned when:

* an unvisited vertex has fewer than two usable neighbours (unvisited
  vertices plus the two path ends);
* two unvisited vertices of usable degree two both need the same path end,
  or one needs both ends while others remain;
* the unvisited vertices are not all reachable from the moving path end.

A vertex with exactly two usable neighbours, one being the moving end,
forces the next step.  Together these make the two-edge cutsets of the
chained constructions cost almost nothing to traverse.

`hc_count_oracle` is the referee: plain enumeration of vertex orders.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .errors import NTooLarge
from .graph import Graph, bits, component_mask

ORACLE_MAX_N = 10


@dataclass(frozen=True)
class HCCountResult:
    count: int
    nodes_expanded: int
    elapsed: float

    def __int__(self) -> int:
        return self.count


class _Stop(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, limit: int | None = None, collect: bool = False):
        self.adj = g.adj
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.limit = limit
        self.collect = collect
        self.count = 0
        self.nodes = 0
        self.cycles: list[tuple[int, ...]] = []
        self.path: list[int] = []

    def run(self) -> None:
        n, adj = self.n, self.adj
        if n < 3 or min(row.bit_count() for row in adj) < 2:
            return
        if component_mask(adj, 0, self.full) != self.full:
            return
        s = min(range(n), key=lambda v: (adj[v].bit_count(), v))
        self.s = s
        self.sbit = 1 << s
        self.path = [s]
        try:
            for x in bits(adj[s]):
                # the closing vertex must be a larger neighbour of s
                if not adj[s] >> (x + 1):
                    break
                self.x2 = x
                self.path.append(x)
                self._extend(x, self.sbit | 1 << x)
                self.path.pop()
        except _Stop:
            pass

    def _found(self) -> None:
        self.count += 1
        if self.collect:
            self.cycles.append(tuple(self.path))
        if self.limit is not None and self.count >= self.limit:
            raise _Stop

    def _extend(self, cur: int, visited: int) -> None:
        self.nodes += 1
        adj = self.adj
        s, x2 = self.s, self.x2
        unvisited = self.full & ~visited
        if not unvisited:
            if adj[cur] >> s & 1 and cur > x2:
                self._found()
            return
        if not (adj[s] & unvisited) >> (x2 + 1):
            return
        curbit = 1 << cur
        usable = unvisited | curbit | self.sbit
        forced_cur = -1
        forced_s = -1
        single = unvisited & (unvisited - 1) == 0
        for u in bits(unvisited):
            av = adj[u] & usable
            c = av.bit_count()
            if c < 2:
                return
            if c == 2:
                to_cur = av & curbit
                to_s = av & self.sbit
                if to_cur and to_s and not single:
                    return
                if to_cur:
                    if forced_cur >= 0:
                        return
                    forced_cur = u
                if to_s:
                    if forced_s >= 0 or u <= x2:
                        return
                    forced_s = u
        if component_mask(adj, cur, unvisited | curbit) != unvisited | curbit:
            return
        if forced_cur >= 0:
            nxt = 1 << forced_cur
        else:
            nxt = adj[cur] & unvisited
        path = self.path
        for u in bits(nxt):
            path.append(u)
            self._extend(u, visited | 1 << u)
            path.pop()


def hc_count(g: Graph) -> HCCountResult:
    """Number of Hamiltonian cycles of ``g``, each undirected cycle counted once."""
    start = time.perf_counter()
    search = _Search(g)
    search.run()
    return HCCountResult(search.count, search.nodes, time.perf_counter() - start)


def is_hamiltonian(g: Graph) -> bool:
    search = _Search(g, limit=1)
    search.run()
    return search.count > 0


def hamiltonian_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every Hamiltonian cycle as a vertex sequence starting at the anchor vertex."""
    search = _Search(g, collect=True)
    search.run()
    return search.cycles


def cycle_edges(cycle: tuple[int, ...]) -> set[tuple[int, int]]:
    n = len(cycle)
    return {(min(cycle[i], cycle[(i + 1) % n]), max(cycle[i], cycle[(i + 1) % n])) for i in range(n)}


def iter_hamiltonian_cycles_oracle(g: Graph) -> Iterator[tuple[int, ...]]:
    n, adj = g.n, g.adj
    if n < 3:
        return
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        prev = 0
        ok = True
        for v in rest:
            if not adj[prev] >> v & 1:
                ok = False
                break
            prev = v
        if ok and adj[prev] & 1:
            yield (0,) + rest


def hc_count_oracle(g: Graph) -> int:
    """Count by filtering all vertex orders that start at vertex 0."""
    if g.n > ORACLE_MAX_N:
        raise NTooLarge(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    return sum(1 for _ in iter_hamiltonian_cycles_oracle(g))
