"""Exhaustive generation of k-regular graphs, one per isomorphism class.

`generate_regular` fills the adjacency matrix one row at a time (vertex
``r`` chooses its neighbours among ``r+1..n-1``) and only keeps matrices
that can still be the canonical representative of `hamiltonia.canon`,
i.e. the labelling with the lexicographically largest row-major string:

* unfinished columns must stay sorted by their bits in the finished rows,
  so each row picks a prefix of every run of identical columns;
* the residual degrees of the unfinished vertices must be graphical;
* no relabelling of the finished rows may already beat them
  (`hamiltonia.canon.exceeds_partial`).

A complete matrix is emitted only if it is exactly canonical, so each
class appears once and no seen-set is needed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canon import canonical_form, exceeds_partial, is_canonical, row_string
from .errors import BadParameters, NTooLarge
from .graph import Graph, component_mask, is_connected, vertex_connectivity

DEFAULT_MAX_N = 14
BRUTEFORCE_MAX_N = 8


def max_n() -> int:
    """Generation cap, overridable through ``HAMILTONIA_MAX_N``."""
    value = os.environ.get("HAMILTONIA_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


@dataclass(frozen=True)
class GenFilter:
    connected_only: bool = True
    kappa2_only: bool = False

    def __post_init__(self) -> None:
        if self.kappa2_only and not self.connected_only:
            raise BadParameters("kappa2_only implies connected_only")

    def accepts(self, g: Graph) -> bool:
        if self.connected_only and not is_connected(g):
            return False
        if self.kappa2_only and vertex_connectivity(g) != 2:
            return False
        return True

    @property
    def label(self) -> str:
        if self.kappa2_only:
            return "kappa2"
        return "connected" if self.connected_only else "all"


def graphical(degrees: list[int]) -> bool:
    """Erdős–Gallai test for a simple graph with the given degree sequence."""
    d = sorted(degrees, reverse=True)
    total = sum(d)
    if total % 2:
        return False
    prefix = 0
    for j in range(1, len(d) + 1):
        prefix += d[j - 1]
        rhs = j * (j - 1) + sum(min(x, j) for x in d[j:])
        if prefix > rhs:
            return False
    return True


def _compositions(sizes: list[int], total: int) -> Iterator[list[int]]:
    """All ``c`` with ``0 <= c[i] <= sizes[i]`` and ``sum(c) == total``, largest first."""
    if not sizes:
        if total == 0:
            yield []
        return
    room = sum(sizes[1:])
    for c in range(min(sizes[0], total), max(0, total - room) - 1, -1):
        for rest in _compositions(sizes[1:], total - c):
            yield [c] + rest


class _Orderly:
    def __init__(self, n: int, k: int, connected_only: bool):
        self.n = n
        self.k = k
        self.connected_only = connected_only
        self.adj = [0] * n
        self.nodes = 0

    def run(self) -> Iterator[Graph]:
        yield from self._fill(0)

    def _runs(self, r: int) -> list[list[int]]:
        # unfinished columns r..n-1 grouped by their bits in rows 0..r-1
        head = (1 << r) - 1
        runs: list[list[int]] = []
        prev = None
        for x in range(r + 1, self.n):
            key = self.adj[x] & head
            if runs and key == prev:
                runs[-1].append(x)
            else:
                runs.append([x])
                prev = key
        return runs

    def _fill(self, r: int) -> Iterator[Graph]:
        n, k, adj = self.n, self.k, self.adj
        self.nodes += 1
        if r == n - 1:
            if adj[r].bit_count() == k:
                g = Graph(n, tuple(adj))
                if is_canonical(g):
                    yield g
            return
        need = k - adj[r].bit_count()
        runs = self._runs(r)
        sizes = [len(run) if adj[run[0]].bit_count() < k else 0 for run in runs]
        for comp in _compositions(sizes, need):
            chosen = 0
            for run, c in zip(runs, comp):
                for x in run[:c]:
                    chosen |= 1 << x
            for x in range(r + 1, n):
                if chosen >> x & 1:
                    adj[x] |= 1 << r
            adj[r] |= chosen
            if self._feasible(r):
                yield from self._fill(r + 1)
            adj[r] &= ~chosen
            for x in range(r + 1, n):
                if chosen >> x & 1:
                    adj[x] &= ~(1 << r)

    def _feasible(self, r: int) -> bool:
        n, k, adj = self.n, self.k, self.adj
        residual = [k - adj[x].bit_count() for x in range(r + 1, n)]
        if not graphical(residual):
            return False
        if self.connected_only and r + 1 < n:
            done = (1 << (r + 1)) - 1
            full = (1 << n) - 1
            seen = 0
            for v in range(r + 1):
                if seen >> v & 1:
                    continue
                comp = component_mask(adj, v, full)
                seen |= comp
                if comp & ~done == 0:
                    return False
        target = row_string(adj, n, r + 1)
        return not exceeds_partial(adj, n, r + 1, target)


def _check_args(n: int, k: int, cap: int) -> None:
    if n > cap:
        raise NTooLarge(f"n={n} exceeds the generation cap {cap} (set HAMILTONIA_MAX_N to raise it)")
    if n < 1 or k < 0:
        raise BadParameters(f"invalid (n, k) = ({n}, {k})")


def generate_regular(n: int, k: int, filter: GenFilter = GenFilter(), cap: int | None = None) -> Iterator[Graph]:
    """Yield one canonical representative per class of k-regular graphs on n vertices.

    Order is deterministic.  Odd ``n*k`` or ``k >= n`` yields nothing.
    """
    _check_args(n, k, max_n() if cap is None else cap)
    if k >= n or (n * k) % 2:
        return
    search = _Orderly(n, k, filter.connected_only)
    for g in search.run():
        if filter.accepts(g):
            yield g


def generate_regular_bruteforce(n: int, k: int) -> Iterator[Graph]:
    """Referee: every labelled k-regular graph, deduplicated by canonical form.

    Backtracks over the upper triangle with a degree cap only; no
    symmetry reasoning.  Yields in order of first discovery.
    """
    if n > BRUTEFORCE_MAX_N:
        raise NTooLarge(f"brute force limited to n <= {BRUTEFORCE_MAX_N}")
    _check_args(n, k, BRUTEFORCE_MAX_N)
    if k >= n or (n * k) % 2:
        return
    seen = set()
    adj = [0] * n

    def fill(v: int) -> Iterator[Graph]:
        if v == n:
            g = Graph(n, tuple(adj))
            form = canonical_form(g)
            if form not in seen:
                seen.add(form)
                yield g
            return
        need = k - adj[v].bit_count()
        cands = [x for x in range(v + 1, n) if adj[x].bit_count() < k]
        if need < 0 or need > len(cands):
            return
        for chosen in combinations(cands, need):
            for x in chosen:
                adj[v] |= 1 << x
                adj[x] |= 1 << v
            yield from fill(v + 1)
            for x in chosen:
                adj[v] &= ~(1 << x)
                adj[x] &= ~(1 << v)

    yield from fill(0)
