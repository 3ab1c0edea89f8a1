"""Minimum Hamiltonian cycle counts over all k-regular graphs of order n.

For each (n, k) cell the generator streams one graph per isomorphism
class, a process pool counts Hamiltonian cycles, and the main process
reduces the counts in generation order.  Because the reduction never sees
scheduling order, a `SurveyRecord` is the same for any worker count.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .canon import canonical_form
from .constructions import build_circulant, build_cocktail, build_complete, build_gnk, build_gstar
from .errors import BadParameters, EmptyClass
from .formulas import below_conj2, below_h, ceil_h, conj2_bound_ceil
from .generate import GenFilter, generate_regular
from .graph import vertex_connectivity
from .graph6 import from_graph6, to_graph6
from .hamcycles import hc_count

CHECKPOINT_EVERY = 10_000

# largest n per k that runs by default; anything bigger needs allow_long
DESK_BUDGET = {3: 14, 4: 12, 5: 10, 6: 10, 7: 8}

CSV_FIELDS = [
    "n",
    "k",
    "num_graphs",
    "num_hamiltonian",
    "min_count",
    "ceil_h",
    "argmin_graph6",
    "argmin_kappa",
    "filtered_flag",
    "wall_time_ms",
]


class SurveyInterrupted(RuntimeError):
    """Raised by ``stop_after``; the checkpoint on disk is current."""


@dataclass
class SurveyRecord:
    n: int
    k: int
    filter: str
    num_graphs: int
    num_hamiltonian: int
    min_count: int | None
    argmin_graph6: list[str]
    argmin_vertex_connectivity: list[int]
    ceil_h: int
    below_ceil_h: list[str]
    low_threshold: int
    low_graphs: list[tuple[str, int]]
    count_histogram: dict[int, int]
    argmin_is_gnk: bool | None = None
    wall_time: float = 0.0

    @property
    def filtered(self) -> bool:
        return self.filter == "kappa2"

    def csv_row(self, timing: bool = True) -> dict[str, object]:
        return {
            "n": self.n,
            "k": self.k,
            "num_graphs": self.num_graphs,
            "num_hamiltonian": self.num_hamiltonian,
            "min_count": "" if self.min_count is None else self.min_count,
            "ceil_h": self.ceil_h,
            "argmin_graph6": ";".join(self.argmin_graph6),
            "argmin_kappa": ";".join(map(str, self.argmin_vertex_connectivity)),
            "filtered_flag": int(self.filtered),
            "wall_time_ms": round(self.wall_time * 1000) if timing else "",
        }

    def to_json(self) -> dict:
        d = asdict(self)
        d["count_histogram"] = {str(c): m for c, m in sorted(self.count_histogram.items())}
        d["low_graphs"] = [list(x) for x in self.low_graphs]
        d["wall_time_ms"] = round(d.pop("wall_time") * 1000)
        return d

    @classmethod
    def from_json(cls, d: dict) -> SurveyRecord:
        d = dict(d)
        d["count_histogram"] = {int(c): m for c, m in d["count_histogram"].items()}
        d["low_graphs"] = [tuple(x) for x in d["low_graphs"]]
        d["wall_time"] = d.pop("wall_time_ms", 0) / 1000
        return cls(**d)


def records_to_csv(records: Iterable[SurveyRecord], timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.csv_row(timing))
    return buf.getvalue()


def records_to_json(records: Iterable[SurveyRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2, sort_keys=True)


def low_threshold(n: int, k: int) -> int:
    """Counts below this are kept per graph: ceil(h), and for k=4 also the quartic bound."""
    t = ceil_h(n, k)
    if k == 4:
        t = max(t, conj2_bound_ceil(n))
    return t


def _count(g6: str) -> int:
    return hc_count(from_graph6(g6)).count


@dataclass
class _State:
    processed: int = 0
    num_hamiltonian: int = 0
    min_count: int | None = None
    argmin: list[str] = field(default_factory=list)
    low: list[tuple[str, int]] = field(default_factory=list)
    histogram: Counter = field(default_factory=Counter)

    def add(self, g6: str, count: int, threshold: int) -> None:
        self.processed += 1
        self.histogram[count] += 1
        if count < threshold:
            self.low.append((g6, count))
        if count == 0:
            return
        self.num_hamiltonian += 1
        if self.min_count is None or count < self.min_count:
            self.min_count = count
            self.argmin = [g6]
        elif count == self.min_count:
            self.argmin.append(g6)

    def to_json(self, key: dict) -> dict:
        return {
            **key,
            "processed": self.processed,
            "num_hamiltonian": self.num_hamiltonian,
            "min_count": self.min_count,
            "argmin": self.argmin,
            "low": [list(x) for x in self.low],
            "histogram": {str(c): m for c, m in self.histogram.items()},
        }

    @classmethod
    def from_json(cls, d: dict) -> _State:
        return cls(
            d["processed"],
            d["num_hamiltonian"],
            d["min_count"],
            list(d["argmin"]),
            [tuple(x) for x in d["low"]],
            Counter({int(c): m for c, m in d["histogram"].items()}),
        )


def _write_checkpoint(path: Path, payload: dict) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(payload, sort_keys=True))
    os.replace(tmp, path)


def check_budget(n: int, k: int, allow_long: bool) -> None:
    limit = DESK_BUDGET.get(k, 10)
    if n > limit and not allow_long:
        raise BadParameters(f"(n={n}, k={k}) is beyond the desk-scale budget n <= {limit}; pass allow_long")


def _counts(g6s: Iterator[str], workers: int) -> Iterator[tuple[str, int]]:
    if workers <= 1:
        for s in g6s:
            yield s, _count(s)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        batch: list[str] = []
        for s in g6s:
            batch.append(s)
            if len(batch) >= 64 * workers:
                yield from zip(batch, pool.map(_count, batch, chunksize=16))
                batch = []
        if batch:
            yield from zip(batch, pool.map(_count, batch, chunksize=16))


def run_survey(
    n: int,
    k: int,
    filter: GenFilter = GenFilter(),
    workers: int = 1,
    *,
    allow_long: bool = False,
    checkpoint: str | os.PathLike | None = None,
    checkpoint_every: int = CHECKPOINT_EVERY,
    stop_after: int | None = None,
    cap: int | None = None,
) -> SurveyRecord:
    """Survey one (n, k) cell.

    With ``checkpoint`` set, progress is flushed every ``checkpoint_every``
    graphs and a later call with the same path resumes from it.
    ``stop_after`` simulates an interruption after that many graphs.
    """
    if workers < 1:
        raise BadParameters("workers must be >= 1")
    check_budget(n, k, allow_long)
    start = time.perf_counter()
    threshold = low_threshold(n, k)
    key = {"n": n, "k": k, "filter": filter.label}
    state = _State()
    path = Path(checkpoint) if checkpoint is not None else None
    if path is not None and path.exists():
        saved = json.loads(path.read_text())
        if {x: saved.get(x) for x in key} != key:
            raise BadParameters(f"checkpoint {path} belongs to a different survey")
        state = _State.from_json(saved)

    graphs = (to_graph6(g) for g in generate_regular(n, k, filter, cap=cap))
    skip = state.processed

    def remaining() -> Iterator[str]:
        for i, s in enumerate(graphs):
            if i >= skip:
                yield s

    for g6, count in _counts(remaining(), workers):
        state.add(g6, count, threshold)
        flush = path is not None and state.processed % checkpoint_every == 0
        if flush:
            _write_checkpoint(path, state.to_json(key))
        if stop_after is not None and state.processed >= stop_after:
            if path is not None and not flush:
                _write_checkpoint(path, state.to_json(key))
            raise SurveyInterrupted(f"stopped after {state.processed} graphs")

    if state.processed == 0:
        raise EmptyClass(f"no {filter.label} {k}-regular graphs on {n} vertices")
    if path is not None:
        _write_checkpoint(path, state.to_json(key))

    ch = ceil_h(n, k)
    argmin = sorted(state.argmin)
    gnk_match = None
    if n % (k + 1) == 0 and n // (k + 1) >= 2 and k >= 3:
        target = canonical_form(build_gnk(k, n // (k + 1)))
        gnk_match = any(canonical_form(from_graph6(s)) == target for s in argmin)
    return SurveyRecord(
        n=n,
        k=k,
        filter=filter.label,
        num_graphs=state.processed,
        num_hamiltonian=state.num_hamiltonian,
        min_count=state.min_count,
        argmin_graph6=argmin,
        argmin_vertex_connectivity=[vertex_connectivity(from_graph6(s)) for s in argmin],
        ceil_h=ch,
        below_ceil_h=sorted(s for s, c in state.low if c < ch),
        low_threshold=threshold,
        low_graphs=sorted(state.low),
        count_histogram=dict(sorted(state.histogram.items())),
        argmin_is_gnk=gnk_match,
        wall_time=time.perf_counter() - start,
    )


def reverify(record: SurveyRecord) -> bool:
    """Recount every listed low graph and the argmin against the stored claims."""
    for s in record.below_ceil_h:
        if hc_count(from_graph6(s)).count >= record.ceil_h:
            return False
    for s, c in record.low_graphs:
        if hc_count(from_graph6(s)).count != c:
            return False
    for s in record.argmin_graph6:
        if hc_count(from_graph6(s)).count != record.min_count:
            return False
    return True


@dataclass
class ConjectureReport:
    """Outcome of a conjecture scan.

    Both conjectures bound the cycle count of Hamiltonian graphs, so
    non-Hamiltonian graphs (for example 4-regular graphs with a cut vertex,
    which first appear at n = 11) are listed separately, not as
    counterexamples.
    """

    conjecture_id: int
    cells: list[tuple[int, int]]
    counterexamples: list[str]
    expected_exceptions_found: list[tuple[str, str]]
    non_hamiltonian: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def identify(g6: str) -> str:
    """Name a graph if it is one of the known small exceptions."""
    g = from_graph6(g6)
    form = canonical_form(g)
    k = g.adj[0].bit_count()
    if g.n == k + 1 and form == canonical_form(build_complete(g.n)):
        return f"K_{g.n}"
    if g.n % 2 == 0 and g.n >= 4 and k == g.n - 2 and form == canonical_form(build_cocktail(g.n // 2)):
        return f"cocktail({g.n // 2})"
    if g.n == 7 and k == 4:
        if form == canonical_form(build_circulant(7, [1, 2])):
            return "Ci_7(1,2)"
    if k == 4 and g.n >= 16 and (g.n - 10) % 6 == 0:
        m = (g.n - 10) // 6
        if form == canonical_form(build_gstar(m)):
            return f"G*_{g.n}"
    return "unnamed"


def check_conjecture1(records: Iterable[SurveyRecord]) -> ConjectureReport:
    """Every Hamiltonian k-regular graph with k >= 5, n >= k+3 has at least h(n,k) cycles."""
    cells, bad, expected, skipped = [], [], [], []
    for r in records:
        if r.k < 5:
            raise BadParameters("conjecture 1 concerns k >= 5")
        cells.append((r.n, r.k))
        for s, c in r.low_graphs:
            if c == 0:
                skipped.append(s)
            elif not below_h(c, r.n, r.k):
                continue
            elif r.n >= r.k + 3:
                bad.append(s)
            else:
                expected.append((identify(s), s))
    return ConjectureReport(1, cells, bad, expected, skipped)


def check_conjecture2(records: Iterable[SurveyRecord]) -> ConjectureReport:
    """Every Hamiltonian 4-regular graph with n >= 8 has at least 9 * 2^((n+2)/6) cycles."""
    cells, bad, skipped = [], [], []
    for r in records:
        if r.k != 4 or r.n < 8:
            raise BadParameters("conjecture 2 concerns k = 4 and n >= 8")
        cells.append((r.n, r.k))
        skipped.extend(s for s, c in r.low_graphs if c == 0)
        bad.extend(s for s, c in r.low_graphs if c > 0 and below_conj2(c, r.n))
    return ConjectureReport(2, cells, bad, [], skipped)


def verify_kappa2_hypothesis(record: SurveyRecord) -> bool:
    """Whether some minimiser has vertex connectivity exactly 2 (needs n >= 2k)."""
    if record.n < 2 * record.k:
        raise BadParameters(f"n={record.n} < 2k={2 * record.k}: no connectivity-2 graphs exist")
    return 2 in record.argmin_vertex_connectivity


def cell_exists(n: int, k: int) -> bool:
    return k < n and (n * k) % 2 == 0


@dataclass
class Tables:
    csv: str
    text: str


def emit_tables(
    records: Iterable[SurveyRecord],
    ns: Iterable[int] | None = None,
    ks: Iterable[int] | None = None,
) -> Tables:
    """Minimum counts next to ceil(h) on an n-by-k grid.

    Cells with no graphs show '-', unsurveyed cells are blank, and cells
    surveyed over connectivity-2 graphs only carry a '*'.
    """
    by_cell = {(r.n, r.k): r for r in records}
    ns = sorted(set(ns) if ns is not None else {n for n, _ in by_cell})
    ks = sorted(set(ks) if ks is not None else {k for _, k in by_cell})

    def min_cell(n: int, k: int) -> str:
        if not cell_exists(n, k):
            return "-"
        r = by_cell.get((n, k))
        if r is None or r.min_count is None:
            return ""
        return f"{r.min_count}*" if r.filtered else str(r.min_count)

    def h_cell(n: int, k: int) -> str:
        return str(ceil_h(n, k)) if cell_exists(n, k) else "-"

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "min_count", "ceil_h", "filtered_flag"])
    for n in ns:
        for k in ks:
            r = by_cell.get((n, k))
            writer.writerow([n, k, min_cell(n, k).rstrip("*"), h_cell(n, k), int(bool(r and r.filtered))])

    header = ["n \\ k"] + [str(k) for k in ks]
    left = [header] + [[str(n)] + [min_cell(n, k) for k in ks] for n in ns]
    right = [header] + [[str(n)] + [h_cell(n, k) for k in ks] for n in ns]
    width = max(len(c) for row in left + right for c in row)
    lines = ["minimum".ljust((width + 1) * len(header)) + "  ceil h(n,k)"]
    for lrow, rrow in zip(left, right):
        lines.append(" ".join(c.rjust(width) for c in lrow) + "   " + " ".join(c.rjust(width) for c in rrow))
    return Tables(buf.getvalue(), "\n".join(lines) + "\n")
