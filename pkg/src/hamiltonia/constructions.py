"""Builders for the graph families with few Hamiltonian cycles.

Block layouts are fixed so that outputs are reproducible; any other choice
of which edges to delete inside a block gives an isomorphic graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import BadParameters
from .graph import Graph, make_graph

FAMILIES = ("gnk", "gstar", "even-chain", "complete", "cocktail", "circulant", "gp")


def _clique(offset: int, size: int) -> set[tuple[int, int]]:
    return {(offset + i, offset + j) for i, j in combinations(range(size), 2)}


def _drop(edges: set[tuple[int, int]], u: int, v: int) -> None:
    edges.remove((min(u, v), max(u, v)))


def build_gnk(k: int, m: int) -> Graph:
    """Chain of ``m`` modified copies of ``K_{k+1}``.

    Copy ``j`` (1-based) occupies vertices ``(j-1)(k+1) .. j(k+1)-1``.
    Local vertex 0 is ``v_j``.  The end copies lose edge (0, 1), local 1
    being ``a_1`` in the first copy and ``b_m`` in the last.  Middle copies
    lose (0, 1) and (0, 2) with local 1 = ``a_j`` and local 2 = ``b_j``.
    Consecutive copies are joined by ``v_i v_{i+1}`` and ``a_i b_{i+1}``.
    """
    if k < 3 or m < 2:
        raise BadParameters(f"gnk needs k >= 3 and m >= 2, got k={k}, m={m}")
    q = k + 1
    edges: set[tuple[int, int]] = set()
    v, a, b = {}, {}, {}
    for j in range(1, m + 1):
        base = (j - 1) * q
        edges |= _clique(base, q)
        v[j] = base
        if j == 1:
            a[j] = base + 1
            _drop(edges, base, base + 1)
        elif j == m:
            b[j] = base + 1
            _drop(edges, base, base + 1)
        else:
            a[j], b[j] = base + 1, base + 2
            _drop(edges, base, base + 1)
            _drop(edges, base, base + 2)
    for i in range(1, m):
        edges.add((v[i], v[i + 1]))
        edges.add((a[i], b[i + 1]))
    return make_graph(m * q, edges)


def gnk_added_edges(k: int, m: int) -> list[tuple[int, int]]:
    """The ``2(m-1)`` joining edges of `build_gnk`, which every Hamiltonian cycle uses."""
    q = k + 1
    out = []
    for i in range(1, m):
        out.append(((i - 1) * q, i * q))
        b_next = i * q + (1 if i + 1 == m else 2)
        out.append(((i - 1) * q + 1, b_next))
    return out


def build_complete(q: int) -> Graph:
    if q < 1:
        raise BadParameters("q must be positive")
    return make_graph(q, combinations(range(q), 2))


def build_cocktail(l: int) -> Graph:
    """``K_{2l}`` minus the perfect matching pairing label ``i`` with ``i + l``.

    Labels ``1..2l`` map to vertices ``0..2l-1``.
    """
    if l < 2:
        raise BadParameters(f"cocktail party graph needs order l >= 2, got {l}")
    return make_graph(2 * l, ((i, j) for i, j in combinations(range(2 * l), 2) if j - i != l))


def build_even_chain(k: int, m: int) -> Graph:
    """Two ``K_{k+1}`` end blocks around ``m`` cocktail party blocks of order ``(k+2)/2``.

    With 1-based block labels: the first block loses edge (1,2), the last
    loses (1,k+1), middle blocks lose both.  Block ``i`` is joined to block
    ``i+1`` by (1 of i, 1 of i+1) and (2 of i, k+1 of i+1).  For ``k = 4``
    this is the ``G*`` family.
    """
    if k < 4 or k % 2 or m < 1:
        raise BadParameters(f"even chain needs even k >= 4 and m >= 1, got k={k}, m={m}")
    return _chain(k, m)


def _middle_partners(k: int) -> dict[int, int]:
    """Non-adjacent pairs of a middle block, on 1-based labels 1..k+2.

    Pairs are (i, i+l) except that 2 is paired with k+1, so the path
    between the two cut edges through 2 and k+1 has as few completions as
    possible.  For k = 4 this is exactly the (i, i+3) pairing.
    """
    l = (k + 2) // 2
    pairs = {i: i + l for i in range(1, l + 1)}
    if pairs[2] != k + 1:
        # (2, l+2) and (l-1, k+1) become (2, k+1) and (l-1, l+2)
        pairs[2], pairs[l - 1] = k + 1, l + 2
    out = {}
    for a, b in pairs.items():
        out[a], out[b] = b, a
    return out


def _chain(k: int, m: int) -> Graph:
    l = (k + 2) // 2
    partner = _middle_partners(k)
    sizes = [k + 1] + [2 * l] * m + [k + 1]
    starts = [0]
    for s in sizes[:-1]:
        starts.append(starts[-1] + s)
    edges: set[tuple[int, int]] = set()
    last = len(sizes) - 1

    def lab(block: int, label: int) -> int:
        return starts[block] + label - 1

    for idx, size in enumerate(sizes):
        if idx in (0, last):
            edges |= _clique(starts[idx], size)
        else:
            edges |= {
                (starts[idx] + i, starts[idx] + j)
                for i, j in combinations(range(size), 2)
                if partner[i + 1] != j + 1
            }
        if idx != last:
            _drop(edges, lab(idx, 1), lab(idx, 2))
        if idx != 0:
            _drop(edges, lab(idx, 1), lab(idx, k + 1))
    for idx in range(last):
        edges.add((lab(idx, 1), lab(idx + 1, 1)))
        edges.add((lab(idx, 2), lab(idx + 1, k + 1)))
    return make_graph(sum(sizes), edges)


def build_gstar(m: int) -> Graph:
    """4-regular chain on ``10 + 6m`` vertices with ``36 * 2^m`` Hamiltonian cycles."""
    if m < 1:
        raise BadParameters(f"gstar needs m >= 1, got {m}")
    return _chain(4, m)


def build_circulant(n: int, offsets: list[int]) -> Graph:
    if n < 3 or not offsets or any(not 1 <= d <= n // 2 for d in offsets):
        raise BadParameters(f"circulant needs n >= 3 and offsets in 1..{n // 2}")
    return make_graph(n, ((i, (i + d) % n) for i in range(n) for d in offsets))


def build_gp(n: int, t: int) -> Graph:
    """Generalized Petersen graph: outer cycle ``0..n-1``, inner vertices ``n..2n-1``."""
    if n < 3 or not 1 <= t < n / 2:
        raise BadParameters(f"GP(n,t) needs n >= 3 and 1 <= t < n/2, got ({n}, {t})")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + t) % n))
    return make_graph(2 * n, edges)


def petersen() -> Graph:
    return build_gp(5, 2)


@dataclass(frozen=True)
class ConstructionSpec:
    """A buildable family member, round-trippable through ``family=gnk k=5 m=4``."""

    family: str
    k: int | None = None
    m: int | None = None
    n: int | None = None
    t: int | None = None
    offsets: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise BadParameters(f"unknown family {self.family!r}; expected one of {FAMILIES}")

    def build(self) -> Graph:
        f = self.family
        if f == "gnk":
            k, m = self._need("k"), self.m
            if m is None:
                n = self._need("n")
                if n % (k + 1):
                    raise BadParameters(f"gnk: n={n} is not a multiple of k+1={k + 1}")
                m = n // (k + 1)
            return build_gnk(k, m)
        if f == "gstar":
            return build_gstar(self._need("m"))
        if f == "even-chain":
            return build_even_chain(self._need("k"), self._need("m"))
        if f == "complete":
            if self.n is not None:
                return build_complete(self.n)
            return build_complete(self._need("k") + 1)
        if f == "cocktail":
            if self.m is not None:
                return build_cocktail(self.m)
            return build_cocktail(self._need("n") // 2)
        if f == "circulant":
            return build_circulant(self._need("n"), list(self.offsets))
        return build_gp(self._need("n"), self._need("t"))

    def _need(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise BadParameters(f"family {self.family} needs {name}")
        return value

    def to_text(self) -> str:
        parts = [f"family={self.family}"]
        for name in ("k", "m", "n", "t"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        if self.offsets:
            parts.append("offsets=" + ",".join(map(str, self.offsets)))
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> ConstructionSpec:
        fields: dict[str, object] = {}
        for token in text.split():
            key, sep, value = token.partition("=")
            if not sep:
                raise BadParameters(f"expected key=value, got {token!r}")
            try:
                if key == "family":
                    fields[key] = value
                elif key == "offsets":
                    fields[key] = tuple(int(x) for x in value.split(","))
                elif key in ("k", "m", "n", "t"):
                    fields[key] = int(value)
                else:
                    raise BadParameters(f"unknown key {key!r}")
            except ValueError as exc:
                raise BadParameters(f"bad value in {token!r}") from exc
        if "family" not in fields:
            raise BadParameters("missing family=")
        return cls(**fields)  # type: ignore[arg-type]
