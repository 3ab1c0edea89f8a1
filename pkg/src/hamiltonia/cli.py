"""Command line entry point: construct, count, gen, formula, survey, verify.

Data goes to stdout, timing and progress to stderr.  Exit codes: 0 success,
2 usage or parameter error, 3 malformed graph6 input, 4 failed verification.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys
import time
from typing import Sequence

from . import formulas, verify
from .constructions import FAMILIES, ConstructionSpec
from .errors import BadParameters, HamiltoniaError, MalformedHeader, NTooLarge, TrailingBits
from .generate import GenFilter, generate_regular
from .graph6 import from_graph6, to_graph6
from .hamcycles import ORACLE_MAX_N, hc_count, hc_count_oracle
from .survey import emit_tables, records_to_csv, records_to_json, run_survey

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_VERIFY = 4

FORMULAS = ("h", "ceil-h", "gstar", "even-chain", "menage", "complete", "eppstein", "gebauer", "gebauer-general")


def _err(msg: str) -> None:
    print(f"hamiltonia: {msg}", file=sys.stderr)


def _open_out(path: str | None):
    if path in (None, "-"):
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w")


def cmd_construct(args: argparse.Namespace) -> int:
    if args.spec:
        spec = ConstructionSpec.from_text(args.spec)
    else:
        offsets = tuple(int(x) for x in args.offsets.split(",")) if args.offsets else ()
        spec = ConstructionSpec(args.family, k=args.k, m=args.m, n=args.n, t=args.t, offsets=offsets)
    print(to_graph6(spec.build()))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    stream = contextlib.nullcontext(sys.stdin) if args.input in (None, "-") else open(args.input)
    status = 0
    with stream as stream:
        for lineno, line in enumerate(stream, 1):
            text = line.strip()
            if not text:
                continue
            try:
                g = from_graph6(text)
            except (MalformedHeader, TrailingBits, NTooLarge) as exc:
                _err(f"line {lineno}: {exc}")
                return EXIT_INPUT
            start = time.perf_counter()
            res = hc_count(g)
            print(f"{text} {res.count}", flush=True)
            print(f"line {lineno}: {res.nodes_expanded} nodes, {time.perf_counter() - start:.3f}s", file=sys.stderr)
            if args.oracle:
                if g.n > ORACLE_MAX_N:
                    _err(f"line {lineno}: oracle skipped, n={g.n} > {ORACLE_MAX_N}")
                    continue
                ref = hc_count_oracle(g)
                if ref != res.count:
                    _err(f"line {lineno}: ORACLE MISMATCH engine={res.count} oracle={ref}")
                    status = EXIT_VERIFY
    return status


def cmd_formula(args: argparse.Namespace) -> int:
    w, k, n = args.which, args.k, args.n

    def need(value: int | None, name: str) -> int:
        if value is None:
            raise BadParameters(f"--{name} is required for {w}")
        return value

    if w == "h":
        value = formulas.h_formula(need(n, "n"), need(k, "k"))
        if isinstance(value, formulas.HValue):
            print(f"{float(value):.6f}")
            return 0
    elif w == "ceil-h":
        value = formulas.ceil_h(need(n, "n"), need(k, "k"))
    elif w == "gstar":
        value = formulas.gstar_count(need(n, "n"))
    elif w == "even-chain":
        value = formulas.even_chain_count(need(k, "k"), need(n, "n"))
    elif w == "menage":
        value = formulas.menage_count(need(k, "k"))
    elif w == "complete":
        value = formulas.complete_count(need(k, "k"))
    elif w == "eppstein":
        print(repr(formulas.eppstein_bound(need(n, "n"))))
        return 0
    elif w == "gebauer":
        print(repr(formulas.gebauer_bound(need(n, "n"))))
        return 0
    else:
        value = formulas.gebauer_general(need(k, "k"), need(n, "n"))
    print(value)
    return 0


def _filter(args: argparse.Namespace) -> GenFilter:
    if args.kappa2:
        return GenFilter(True, True)
    return GenFilter(connected_only=not args.all)


def cmd_gen(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    count = 0
    with _open_out(args.out) as out:
        for g in generate_regular(args.n, args.k, _filter(args), cap=args.max_n):
            out.write(to_graph6(g) + "\n")
            count += 1
    print(f"{count} graphs in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 0


def cmd_survey(args: argparse.Namespace) -> int:
    records = []
    flt = _filter(args)
    for k in args.k:
        for n in args.n:
            if k >= n or (n * k) % 2:
                print(f"(n={n}, k={k}): no graphs", file=sys.stderr)
                continue
            ckpt = os.path.join(args.checkpoint_dir, f"survey_n{n}_k{k}_{flt.label}.json") if args.checkpoint_dir else None
            rec = run_survey(n, k, flt, args.workers, allow_long=args.allow_long, checkpoint=ckpt)
            print(f"(n={n}, k={k}): {rec.num_graphs} graphs, min {rec.min_count}, {rec.wall_time:.2f}s", file=sys.stderr)
            records.append(rec)
    if args.format == "csv":
        text = records_to_csv(records, timing=not args.no_timing)
    elif args.format == "json":
        text = records_to_json(records) + "\n"
    else:
        tables = emit_tables(records, args.n, args.k)
        text = tables.text
    with _open_out(args.out) as out:
        out.write(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    checks = verify.run(args.suite, seed=args.seed)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_VERIFY if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hamiltonia", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks only")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="print one graph6 line for a family member")
    c.add_argument("--spec", help='flat form, e.g. "family=gnk k=5 m=4"')
    c.add_argument("--family", choices=FAMILIES)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--t", type=int, help="skip parameter for gp")
    c.add_argument("--offsets", help="comma-separated circulant offsets")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("count", help="count Hamiltonian cycles of graph6 lines")
    c.add_argument("--in", dest="input", default="-")
    c.add_argument("--oracle", action="store_true", help="cross-check with brute force (n <= 10)")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("formula", help="evaluate a closed form")
    c.add_argument("--which", choices=FORMULAS, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--n", type=int)
    c.set_defaults(func=cmd_formula)

    for name, func in (("gen", cmd_gen), ("survey", cmd_survey)):
        c = sub.add_parser(name)
        if name == "gen":
            c.add_argument("--n", type=int, required=True)
            c.add_argument("--k", type=int, required=True)
            c.add_argument("--max-n", type=int, help="override the generation cap")
        else:
            c.add_argument("--n", type=int, nargs="+", required=True)
            c.add_argument("--k", type=int, nargs="+", required=True)
            c.add_argument("--workers", type=int, default=os.cpu_count() or 1)
            c.add_argument("--allow-long", action="store_true")
            c.add_argument("--format", choices=("csv", "json", "text"), default="csv")
            c.add_argument("--no-timing", action="store_true", help="blank the wall_time_ms column")
            c.add_argument("--checkpoint-dir")
        group = c.add_mutually_exclusive_group()
        group.add_argument("--connected", action="store_true", help="connected graphs only (default)")
        group.add_argument("--all", action="store_true", help="include disconnected graphs")
        group.add_argument("--kappa2", action="store_true", help="vertex connectivity exactly 2")
        c.add_argument("--out", default="-")
        c.set_defaults(func=func)

    c = sub.add_parser("verify", help="run self-check suites")
    c.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "construct" and not args.spec and not args.family:
        _err("construct needs --family or --spec")
        return EXIT_USAGE
    try:
        return args.func(args)
    except (BadParameters, NTooLarge) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except HamiltoniaError as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
