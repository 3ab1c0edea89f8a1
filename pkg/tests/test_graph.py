from __future__ import annotations

import pytest

from hamiltonia.constructions import build_complete, build_gnk, petersen
from hamiltonia.errors import DisconnectedInput, SelfLoop, VertexOutOfRange
from hamiltonia.graph import (
    degree_sequence,
    is_connected,
    is_regular,
    make_graph,
    vertex_connectivity,
)


def test_make_graph_basics():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.num_edges == 4
    assert g.has_edge(3, 0) and not g.has_edge(0, 2)
    assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert degree_sequence(g) == [2, 2, 2, 2]
    assert is_regular(g, 2)


def test_rejects_bad_edges():
    with pytest.raises(SelfLoop):
        make_graph(3, [(1, 1)])
    with pytest.raises(VertexOutOfRange):
        make_graph(3, [(0, 3)])


def test_graph_is_frozen():
    g = make_graph(2, [(0, 1)])
    with pytest.raises(AttributeError):
        g.n = 3  # type: ignore[misc]


def test_relabel_preserves_edges():
    g = petersen()
    perm = list(range(10))[::-1]
    h = g.relabel(perm)
    assert {frozenset((perm[u], perm[v])) for u, v in g.edges()} == {frozenset(e) for e in h.edges()}


def test_complement_of_complete_is_empty():
    assert build_complete(5).complement().num_edges == 0


def test_connectivity():
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))
    assert vertex_connectivity(build_complete(6)) == 5
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(build_gnk(4, 2)) == 2
    assert vertex_connectivity(make_graph(3, [(0, 1), (1, 2)])) == 1
    with pytest.raises(DisconnectedInput):
        vertex_connectivity(make_graph(4, [(0, 1), (2, 3)]))


def test_remove_vertices():
    rows = build_complete(5).remove_vertices(0b11)
    assert rows[:2] == (0, 0)
    assert rows[2:] == (0b11000, 0b10100, 0b01100)
