"""Self-check suites run by ``hamiltonia verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .canon import canonical_form
from .constructions import (
    build_circulant,
    build_cocktail,
    build_complete,
    build_gnk,
    build_gp,
    build_gstar,
    petersen,
)
from .formulas import (
    ceil_h,
    complete_count,
    gstar_count,
    h_chain_form,
    h_formula,
    menage_count,
    singmaster_bound_check,
)
from .generate import GenFilter, generate_regular, generate_regular_bruteforce
from .graph import Graph, is_connected, make_graph
from .hamcycles import hc_count, hc_count_oracle
from .known_values import KNOWN_CEIL_H

THEOREM1_CELLS = [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3), (6, 2)]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _eq(name: str, got: object, want: object) -> Check:
    return Check(name, got == want, f"got {got}, expected {want}")


def theorem1() -> list[Check]:
    out = []
    for k, m in THEOREM1_CELLS:
        n = m * (k + 1)
        got = hc_count(build_gnk(k, m)).count
        out.append(_eq(f"G({n},{k}) cycles = h({n},{k})", got, h_formula(n, k)))
        out.append(_eq(f"h({n},{k}) closed form = block product", h_formula(n, k), h_chain_form(k, m)))
    return out


def lemma() -> list[Check]:
    out = [_eq(f"G*({10 + 6 * m}) cycles = 36*2^{m}", hc_count(build_gstar(m)).count, 36 * 2 ** m) for m in (1, 2, 3)]
    worst = [n for n in range(16, 131, 6) if not gstar_count(n) < ceil_h(n, 4)]
    out.append(Check("G* count < ceil h(n,4) for n = 16..130", not worst, f"failing n: {worst}" if worst else ""))
    return out


def named() -> list[Check]:
    out = [_eq(f"K_{k + 1} cycles = {k}!/2", hc_count(build_complete(k + 1)).count, complete_count(k)) for k in range(3, 8)]
    out.append(_eq("cocktail(3) cycles", hc_count(build_cocktail(3)).count, 16))
    out.append(_eq("cocktail(4) cycles", hc_count(build_cocktail(4)).count, 744))
    out.append(_eq("Ci_7(1,2) cycles", hc_count(build_circulant(7, [1, 2])).count, 23))
    out.append(_eq("GP(9,2) cycles", hc_count(build_gp(9, 2)).count, 3))
    out.append(_eq("Petersen cycles", hc_count(petersen()).count, 0))
    return out


def menage() -> list[Check]:
    return [
        _eq(f"menage({k}) = cycles of cocktail({k // 2 + 1})", menage_count(k), hc_count(build_cocktail(k // 2 + 1)).count)
        for k in (2, 4, 6, 8)
    ]


def bounds() -> list[Check]:
    out = []
    for k in (6, 8, 10, 12):
        res = singmaster_bound_check(k)
        out.append(Check(f"(k+1)!/(2e) separates cocktail and h at k={k}", res.cocktail_below and res.h_above, f"{res}"))
    return out


def table2() -> list[Check]:
    return [_eq(f"ceil h({n},{k})", ceil_h(n, k), v) for (n, k), v in sorted(KNOWN_CEIL_H.items())]


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        p = rng.uniform(0.3, 0.9)
        g = make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        if is_connected(g):
            return g


def oracle(seed: int = 0, samples: int = 200) -> list[Check]:
    mismatches = []
    checked = 0
    for n in range(4, 9):
        for k in range(3, n):
            for g in generate_regular(n, k, GenFilter()):
                checked += 1
                if hc_count(g).count != hc_count_oracle(g):
                    mismatches.append(g)
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_connected_graph(rng, rng.randint(3, 9))
        checked += 1
        if hc_count(g).count != hc_count_oracle(g):
            mismatches.append(g)
    return [Check(f"engine = oracle on {checked} graphs", not mismatches, f"{len(mismatches)} mismatches")]


def generator() -> list[Check]:
    out = []
    for n in range(4, 9):
        for k in range(3, n):
            if (n * k) % 2:
                continue
            a = {canonical_form(g) for g in generate_regular(n, k, GenFilter(connected_only=False))}
            b = {canonical_form(g) for g in generate_regular_bruteforce(n, k)}
            out.append(Check(f"orderly = brute force for ({n},{k})", a == b, f"{len(a)} vs {len(b)} classes"))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "theorem1": theorem1,
    "lemma": lemma,
    "named": named,
    "menage": menage,
    "bounds": bounds,
    "table2": table2,
    "oracle": oracle,
    "generator": generator,
}


def run(suite: str, seed: int = 0) -> list[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        fn = SUITES[name]
        out.extend(fn(seed=seed) if name == "oracle" else fn())
    return out
