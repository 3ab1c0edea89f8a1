from __future__ import annotations

import pytest

from hamiltonia.canon import is_isomorphic
from hamiltonia.constructions import (
    ConstructionSpec,
    build_circulant,
    build_cocktail,
    build_even_chain,
    build_gnk,
    build_gp,
    build_gstar,
    petersen,
)
from hamiltonia.errors import BadParameters
from hamiltonia.graph import is_connected, is_regular, vertex_connectivity


@pytest.mark.parametrize("k,m", [(3, 2), (3, 3), (4, 2), (5, 4), (6, 2), (7, 3)])
def test_gnk_shape(k, m):
    g = build_gnk(k, m)
    assert g.n == m * (k + 1)
    assert is_regular(g, k) and is_connected(g)
    assert vertex_connectivity(g) == 2


def test_gnk_rejects_small_m():
    with pytest.raises(BadParameters):
        build_gnk(5, 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_gstar_shape(m):
    g = build_gstar(m)
    assert g.n == 10 + 6 * m
    assert is_regular(g, 4) and is_connected(g)


def test_even_chain_four_is_gstar():
    assert is_isomorphic(build_even_chain(4, 1), build_gstar(1))


def test_other_families():
    assert is_regular(build_cocktail(4), 6)
    assert is_regular(build_circulant(7, [1, 2]), 4)
    assert is_regular(build_gp(9, 2), 3)
    assert is_isomorphic(build_gp(5, 2), petersen())


@pytest.mark.parametrize(
    "text",
    ["family=gnk k=5 m=4", "family=gstar m=2", "family=circulant n=7 offsets=1,2", "family=gp n=9 t=2"],
)
def test_spec_roundtrip(text):
    spec = ConstructionSpec.from_text(text)
    assert spec.to_text() == text
    assert ConstructionSpec.from_text(spec.to_text()) == spec
    spec.build()


def test_spec_errors():
    with pytest.raises(BadParameters):
        ConstructionSpec("nope")
    with pytest.raises(BadParameters):
        ConstructionSpec("gnk", k=5, n=13).build()
