from __future__ import annotations

import pytest

from hamiltonia.canon import canonical_form, is_canonical
from hamiltonia.errors import BadParameters, NTooLarge
from hamiltonia.generate import (
    GenFilter,
    generate_regular,
    generate_regular_bruteforce,
    graphical,
)
from hamiltonia.graph import is_connected, is_regular, vertex_connectivity

# connected k-regular isomorphism classes (standard enumeration counts)
CONNECTED_CLASSES = {
    (4, 3): 1, (6, 3): 2, (8, 3): 5, (10, 3): 19, (12, 3): 85,
    (5, 4): 1, (6, 4): 1, (7, 4): 2, (8, 4): 6, (9, 4): 16, (10, 4): 59, (11, 4): 265,
    (6, 5): 1, (8, 5): 3, (10, 5): 60,
    (7, 6): 1, (8, 6): 1, (9, 6): 4, (10, 6): 21,
    (8, 7): 1, (10, 7): 5,
}


@pytest.mark.parametrize("cell,want", sorted(CONNECTED_CLASSES.items()))
def test_class_counts(cell, want):
    assert sum(1 for _ in generate_regular(*cell)) == want


@pytest.mark.parametrize("n", range(4, 9))
def test_matches_bruteforce(n):
    for k in range(0, n):
        if (n * k) % 2:
            continue
        a = {canonical_form(g) for g in generate_regular(n, k, GenFilter(connected_only=False))}
        b = {canonical_form(g) for g in generate_regular_bruteforce(n, k)}
        assert a == b


def test_output_is_canonical_and_regular():
    gs = list(generate_regular(10, 4))
    assert all(is_canonical(g) and is_regular(g, 4) and is_connected(g) for g in gs)
    assert len({canonical_form(g) for g in gs}) == len(gs)


def test_deterministic_order():
    assert list(generate_regular(9, 4)) == list(generate_regular(9, 4))


def test_disconnected_included_with_all():
    # 2 K_4 on 8 vertices is the only disconnected cubic graph of that order
    everything = list(generate_regular(8, 3, GenFilter(connected_only=False)))
    assert len(everything) == 6
    assert sum(not is_connected(g) for g in everything) == 1


def test_kappa2_filter():
    gs = list(generate_regular(10, 4, GenFilter(True, True)))
    assert gs and all(vertex_connectivity(g) == 2 for g in gs)
    with pytest.raises(BadParameters):
        GenFilter(connected_only=False, kappa2_only=True)


def test_no_graphs_for_odd_product():
    assert list(generate_regular(7, 3)) == []
    assert list(generate_regular(5, 5)) == []


def test_cap(monkeypatch):
    with pytest.raises(NTooLarge):
        next(generate_regular(20, 4))
    monkeypatch.setenv("HAMILTONIA_MAX_N", "8")
    with pytest.raises(NTooLarge):
        next(generate_regular(9, 4))
    assert len(list(generate_regular(9, 4, cap=9))) == 16


def test_graphical():
    assert graphical([3, 3, 3, 3])
    assert not graphical([3, 3, 1, 1])
    assert not graphical([1, 1, 1])
