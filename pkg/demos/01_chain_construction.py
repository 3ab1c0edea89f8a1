"""Chains of near-cliques force few Hamiltonian cycles.

Build G(n,k) -- m copies of K_{k+1} minus an edge, joined in a ring by
pairs of edges -- and watch the count factor into one term per block.
Every joining edge sits in a 2-edge cut, so every cycle must use it.
"""

from __future__ import annotations

from hamiltonia.constructions import build_gnk, gnk_added_edges
from hamiltonia.formulas import h_chain_form, h_formula
from hamiltonia.graph import vertex_connectivity
from hamiltonia.graph6 import to_graph6
from hamiltonia.hamcycles import cycle_edges, hamiltonian_cycles, hc_count

print(f"{'k':>2} {'m':>2} {'n':>3} {'cycles':>8} {'h(n,k)':>8}  kappa  graph6")
for k, m in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3), (6, 2)]:
    g = build_gnk(k, m)
    res = hc_count(g)
    print(f"{k:>2} {m:>2} {g.n:>3} {res.count:>8} {h_formula(g.n, k):>8}  {vertex_connectivity(g):>5}  {to_graph6(g)}")
    assert res.count == h_chain_form(k, m)

g = build_gnk(4, 3)
joins = set(gnk_added_edges(4, 3))
used = [joins <= cycle_edges(c) for c in hamiltonian_cycles(g)]
print(f"\nG(15,4): all {len(used)} cycles use the {len(joins)} joining edges: {all(used)}")
