from __future__ import annotations

import random
from itertools import combinations, permutations

import networkx as nx
from hypothesis import given, settings, strategies as st

from hamiltonia.canon import (
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_canonical,
    is_isomorphic,
)
from hamiltonia.constructions import build_complete, build_gp, petersen
from hamiltonia.graph import make_graph
from hamiltonia.verify import random_connected_graph


def upper_string(g):
    return tuple(int(g.has_edge(i, j)) for i, j in combinations(range(g.n), 2))


def brute_best(g):
    return max(upper_string(g.relabel(list(p))) for p in permutations(range(g.n)))


@st.composite
def graph_and_perm(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(list(range(n))))
    return make_graph(n, edges), list(perm)


@given(graph_and_perm())
def test_form_invariant_under_relabelling(data):
    g, perm = data
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@settings(max_examples=60)
@given(graph_and_perm(max_n=6))
def test_canonical_graph_is_lex_max(data):
    g, _ = data
    c = canonical_graph(g)
    assert is_canonical(c)
    assert upper_string(c) == brute_best(g)


def test_labeling_is_a_permutation():
    g = build_gp(7, 2)
    lab = canonical_labeling(g)
    assert sorted(lab) == list(range(14))
    assert g.relabel(lab) == canonical_graph(g)


def test_agrees_with_networkx():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(4, 9)
        g = random_connected_graph(rng, n)
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            h = g.relabel(perm)
        else:
            h = random_connected_graph(rng, n)
        ng = nx.Graph(list(g.edges()))
        nh = nx.Graph(list(h.edges()))
        ng.add_nodes_from(range(n))
        nh.add_nodes_from(range(n))
        assert is_isomorphic(g, h) == nx.is_isomorphic(ng, nh)


def test_symmetric_graphs():
    assert is_isomorphic(petersen(), build_gp(5, 2))
    assert not is_isomorphic(petersen(), build_gp(5, 1))
    assert canonical_form(build_complete(40)) == canonical_form(build_complete(40).relabel(list(range(39, -1, -1))))
