from __future__ import annotations

import random
from collections import Counter

import pytest

from hamiltonia.constructions import (
    build_circulant,
    build_cocktail,
    build_complete,
    build_even_chain,
    build_gnk,
    build_gp,
    build_gstar,
    gnk_added_edges,
    petersen,
)
from hamiltonia.errors import NTooLarge
from hamiltonia.formulas import even_chain_count, h_formula
from hamiltonia.generate import generate_regular
from hamiltonia.graph import make_graph
from hamiltonia.hamcycles import (
    cycle_edges,
    hamiltonian_cycles,
    hc_count,
    hc_count_oracle,
    is_hamiltonian,
)
from hamiltonia.verify import random_connected_graph


def test_small_cases():
    assert hc_count(make_graph(3, [(0, 1), (1, 2), (0, 2)])).count == 1
    assert hc_count(make_graph(4, [(0, 1), (1, 2), (2, 3)])).count == 0
    assert hc_count(make_graph(2, [(0, 1)])).count == 0


def test_named_graphs():
    assert [hc_count(build_complete(q)).count for q in range(3, 9)] == [1, 3, 12, 60, 360, 2520]
    assert hc_count(build_circulant(7, [1, 2])).count == 23
    assert hc_count(build_gp(9, 2)).count == 3
    assert hc_count(petersen()).count == 0
    assert not is_hamiltonian(petersen())
    assert hc_count(build_cocktail(4)).count == 744


@pytest.mark.parametrize("k,m", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_gnk_matches_formula(k, m):
    assert hc_count(build_gnk(k, m)).count == h_formula(m * (k + 1), k)


def test_gstar_counts():
    assert [hc_count(build_gstar(m)).count for m in (1, 2)] == [72, 144]


def test_oracle_equivalence_random():
    rng = random.Random(3)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(3, 8))
        assert hc_count(g).count == hc_count_oracle(g)


def test_oracle_cap():
    with pytest.raises(NTooLarge):
        hc_count_oracle(build_complete(11))


def test_cycles_are_distinct_and_valid():
    g = build_gp(9, 2)
    cycles = hamiltonian_cycles(g)
    assert len({frozenset(cycle_edges(c)) for c in cycles}) == len(cycles) == 3
    for c in cycles:
        assert sorted(c) == list(range(g.n))
        assert all(g.has_edge(u, v) for u, v in cycle_edges(c))


def test_monotone_under_edge_addition():
    rng = random.Random(11)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(4, 9))
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        if missing:
            h = g.add_edge(*rng.choice(missing))
            assert hc_count(h).count >= hc_count(g).count


def test_cubic_edges_lie_on_even_number_of_cycles():
    # in a cubic graph every edge lies on an even number of Hamiltonian cycles
    for g in generate_regular(10, 3):
        per_edge = Counter(e for c in hamiltonian_cycles(g) for e in cycle_edges(c))
        assert all(per_edge[e] % 2 == 0 for e in g.edges())


@pytest.mark.parametrize("k,m", [(3, 3), (4, 2), (5, 2)])
def test_joining_edges_are_forced(k, m):
    g = build_gnk(k, m)
    joins = set(gnk_added_edges(k, m))
    assert all(joins <= cycle_edges(c) for c in hamiltonian_cycles(g))


def _middle_block_factor(k: int) -> int:
    """Hamiltonian paths from local k+1 to local 2 through a middle block without local 1."""
    g = build_even_chain(k, 1)
    first = k + 1  # the middle block starts after one K_{k+1}
    local = [first + i for i in range(1, k + 2)]  # local labels 2..k+2
    index = {v: i for i, v in enumerate(local)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    hub = len(local)  # closes each path into a cycle
    edges += [(hub, index[first + 1]), (hub, index[first + k])]
    return hc_count(make_graph(hub + 1, edges)).count


@pytest.mark.parametrize("k,factor", [(4, 2), (6, 48), (8, 1968)])
def test_even_chain_block_factor(k, factor):
    assert _middle_block_factor(k) == factor


@pytest.mark.slow
def test_even_chain_six_full_count():
    g = build_even_chain(6, 1)
    assert hc_count(g).count == even_chain_count(6, g.n) == 691200
