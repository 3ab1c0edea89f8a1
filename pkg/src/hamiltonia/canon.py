"""Canonical forms by maximising the row-major adjacency string.

For a labelling ``pi`` the string ``S(pi)`` is the upper triangle of the
relabelled adjacency matrix read row by row: row 0 over columns 1..n-1,
row 1 over columns 2..n-1, and so on.  The canonical form is the
lexicographic maximum of ``S`` over all labellings.

The search fixes vertices one position at a time.  Unplaced vertices are
kept in an ordered partition whose cells share their adjacency to every
placed vertex; the next position can only be filled from the first cell
without making some already-final row smaller, so only those branches are
explored.  Branches are further cut by comparison against the best string
found so far and by orbits of automorphisms discovered along the way
(twin transpositions are known up front).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: bytes

    def hex(self) -> str:
        return f"{self.n}:{self.bits.hex()}"


def _split(cells: list[int], nbrs: int) -> list[int]:
    out = []
    for c in cells:
        a = c & nbrs
        if a:
            out.append(a)
        b = c & ~nbrs
        if b:
            out.append(b)
    return out


def _row(cells: list[int], nbrs: int) -> int:
    # cells are already split by nbrs, so each one is all-in or all-out
    row = 0
    for c in cells:
        size = c.bit_count()
        row <<= size
        if c & nbrs:
            row |= (1 << size) - 1
    return row


def _place(cells: list[int], v: int, nbrs: int) -> tuple[list[int], int]:
    rest = cells[0] & ~(1 << v)
    new = _split(([rest] if rest else []) + cells[1:], nbrs)
    return new, _row(new, nbrs)


def _twin_pairs(adj: Sequence[int]) -> list[tuple[int, int]]:
    n = len(adj)
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] == adj[v] or adj[u] | 1 << u == adj[v] | 1 << v:
                pairs.append((u, v))
    return pairs


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _CanonSearch:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.twins = _twin_pairs(adj)
        self.autos: list[tuple[int, ...]] = []
        self.best_rows: list[int] | None = None
        self.best_perm: list[int] | None = None

    def run(self) -> tuple[list[int], list[int]]:
        self._rec([], [(1 << self.n) - 1], [])
        assert self.best_rows is not None and self.best_perm is not None
        return self.best_rows, self.best_perm

    def _orbits(self, prefix: list[int]) -> _UnionFind:
        uf = _UnionFind(self.n)
        fixed = set(prefix)
        for u, v in self.twins:
            if u not in fixed and v not in fixed:
                uf.union(u, v)
        for a in self.autos:
            if all(a[p] == p for p in prefix):
                for x in range(self.n):
                    uf.union(x, a[x])
        return uf

    def _rec(self, prefix: list[int], cells: list[int], rows: list[int]) -> None:
        i = len(prefix)
        if not cells:
            if self.best_rows is None or rows > self.best_rows:
                self.best_rows = rows.copy()
                self.best_perm = prefix.copy()
            elif rows == self.best_rows:
                auto = [0] * self.n
                for a, b in zip(self.best_perm, prefix):
                    auto[a] = b
                self.autos.append(tuple(auto))
            return
        first = cells[0]
        explored: list[int] = []
        for v in bits(first):
            if explored:
                uf = self._orbits(prefix)
                rv = uf.find(v)
                if any(uf.find(u) == rv for u in explored):
                    continue
            explored.append(v)
            new, row = _place(cells, v, self.adj[v])
            rows.append(row)
            if self.best_rows is None or rows >= self.best_rows[: i + 1]:
                prefix.append(v)
                self._rec(prefix, new, rows)
                prefix.pop()
            rows.pop()


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``perm`` with ``g.relabel(perm)`` the canonical representative."""
    _, order = _CanonSearch(g.adj).run()
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return perm


def _pack(n: int, rows: Sequence[int]) -> bytes:
    acc = 0
    for i, row in enumerate(rows):
        acc = acc << (n - 1 - i) | row
    total = n * (n - 1) // 2
    return acc.to_bytes((total + 7) // 8, "big")


def canonical_form(g: Graph) -> CanonicalForm:
    rows, _ = _CanonSearch(g.adj).run()
    return CanonicalForm(g.n, _pack(g.n, rows))


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def row_string(adj: Sequence[int], n: int, nrows: int | None = None) -> list[int]:
    """Rows of ``S`` for the identity labelling (first ``nrows`` rows)."""
    nrows = n if nrows is None else nrows
    out = []
    for i in range(nrows):
        row = 0
        for j in range(i + 1, n):
            row = row << 1 | (adj[i] >> j & 1)
        out.append(row)
    return out


def is_canonical(g: Graph) -> bool:
    """True iff the identity labelling already attains the canonical string."""
    rows, _ = _CanonSearch(g.adj).run()
    return rows == row_string(g.adj, g.n)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(row.bit_count() for row in g.adj) != sorted(row.bit_count() for row in h.adj):
        return False
    return canonical_form(g) == canonical_form(h)


def exceeds_partial(adj: Sequence[int], n: int, head: int, target: Sequence[int]) -> bool:
    """Whether some labelling beats ``target`` on its first ``head`` rows.

    Only the rows of vertices ``0..head-1`` of ``adj`` need to be final;
    the search only places those vertices in the first ``head`` positions,
    so every entry it compares is known.  A True answer means no completion
    of the partial matrix can be canonical.
    """
    eligible = (1 << head) - 1
    full_rows = adj

    def twins(u: int, v: int) -> bool:
        a, b = full_rows[u], full_rows[v]
        return a == b or a | 1 << u == b | 1 << v

    def rec(i: int, cells: list[int]) -> bool:
        if i == head:
            return False
        cand = cells[0] & eligible
        tried: list[int] = []
        for v in bits(cand):
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            new, row = _place(cells, v, full_rows[v])
            t = target[i]
            if row > t:
                return True
            if row == t and rec(i + 1, new):
                return True
        return False

    return rec(0, [(1 << n) - 1])
