"""Command-line front end.

Four subcommands: solve computes gamma_OL and the forced partition of
one or more graphs, gen emits a half-graph, recognize tests the
half-graph structure, verify sweeps an order exhaustively (or a stream)
through the theorem harness.  Graphs travel as graph6 records; a
positional argument naming an existing file is read line by line, any
other positional is taken as an inline record, and no positional at all
means stdin.

Exit codes: 0 success (for verify: theorem holds, no violations),
1 usage error, 2 unreadable input, 3 graph admits no OLD set,
4 the sweep found a violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from .domination import (
    BRUTEFORCE,
    NotLocatableError,
    old_number,
    old_number_bruteforce,
)
from .enumeration import MAX_BUILTIN_ORDER, enumerate_connected_graphs
from .forced import classify_forced
from .graph6 import GraphFormatError, parse_graph6, to_graph6
from .graphs import Graph, connected_components, is_connected, vertices_of
from .halfgraphs import half_graph, is_half_graph, is_union_of_half_graphs
from .harness import run_harness

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NOT_LOCATABLE = 3
EXIT_VIOLATION = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here reserves 2 for
    # unreadable graph input, so usage problems become exit 1 instead
    def error(self, message):
        raise _UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _set(mask_vertices: Iterable[int]) -> str:
    inner = ", ".join(str(v) for v in mask_vertices)
    return "{" + inner + "}"


def _records(args_graphs: list[str]) -> list[str]:
    """Resolve positionals to graph6 records; stdin when none given."""
    if not args_graphs:
        return [line for line in (l.strip() for l in sys.stdin) if line]
    records = []
    for item in args_graphs:
        if os.path.exists(item):
            with open(item, encoding="ascii") as handle:
                records.extend(line for line in (l.strip() for l in handle) if line)
        else:
            records.append(item)
    return records


def _cmd_solve(args) -> int:
    solver = old_number_bruteforce if args.solver == BRUTEFORCE else old_number
    status = EXIT_OK
    for record in _records(args.graphs):
        try:
            g = parse_graph6(record)
        except GraphFormatError as exc:
            print(exc, file=sys.stderr)
            return EXIT_PARSE
        try:
            result = solver(g)
        except NotLocatableError as exc:
            print(f"{record}: {exc}", file=sys.stderr)
            status = EXIT_NOT_LOCATABLE
            continue
        parts = classify_forced(g)
        if args.format == "structured":
            print(
                _dump(
                    {
                        "graph6": record,
                        "n": g.n,
                        "gamma": result.gamma,
                        "witness": vertices_of(result.witness),
                        "domination_forced": vertices_of(parts.domination_forced),
                        "location_forced": vertices_of(parts.location_forced),
                        "unforced": vertices_of(parts.unforced),
                        "method": result.method,
                        "nodes_explored": result.nodes_explored,
                    }
                )
            )
        else:
            print(f"{record}: n={g.n}, gamma_OL={result.gamma}")
            print(f"  witness = {_set(vertices_of(result.witness))}")
            print(f"  domination-forced = {_set(vertices_of(parts.domination_forced))}")
            print(f"  location-forced = {_set(vertices_of(parts.location_forced))}")
            print(f"  unforced = {_set(vertices_of(parts.unforced))}")
            print(f"  method = {result.method}, nodes = {result.nodes_explored}")
    return status


def _cmd_gen(args) -> int:
    print(to_graph6(half_graph(args.k)))
    return EXIT_OK


def _recognize_payload(g: Graph, record: str) -> dict:
    payload: dict = {"graph6": record, "n": g.n, "connected": is_connected(g)}
    labeling = is_half_graph(g)
    payload["half_graph"] = labeling is not None
    if labeling is not None:
        payload["k"] = labeling.k
        payload["v_order"] = list(labeling.v_order)
        payload["w_order"] = list(labeling.w_order)
    if not payload["connected"]:
        payload["components"] = []
        for component, kept in connected_components(g):
            sub = is_half_graph(component)
            entry: dict = {
                "vertices": list(kept),
                "half_graph": sub is not None,
            }
            if sub is not None:
                entry["k"] = sub.k
            payload["components"].append(entry)
    payload["union_of_half_graphs"] = is_union_of_half_graphs(g)
    return payload


def _cmd_recognize(args) -> int:
    for record in _records(args.graphs):
        try:
            g = parse_graph6(record)
        except GraphFormatError as exc:
            print(exc, file=sys.stderr)
            return EXIT_PARSE
        payload = _recognize_payload(g, record)
        if args.format == "structured":
            print(_dump(payload))
            continue
        if payload["half_graph"]:
            print(
                f"{record}: half-graph k={payload['k']}, "
                f"v_order={payload['v_order']}, w_order={payload['w_order']}"
            )
        elif payload["connected"]:
            print(f"{record}: not a half-graph")
        else:
            print(f"{record}: disconnected")
            for entry in payload["components"]:
                verdict = (
                    f"half-graph k={entry['k']}"
                    if entry["half_graph"]
                    else "not a half-graph"
                )
                print(f"  component {entry['vertices']}: {verdict}")
            yes = "yes" if payload["union_of_half_graphs"] else "no"
            print(f"  union of half-graphs: {yes}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    record_errors: list[str] = []
    if args.stream is None:
        if args.n is None:
            raise _UsageError("verify needs --n, --stream, or both")
        if not 1 <= args.n <= MAX_BUILTIN_ORDER:
            raise _UsageError(
                f"built-in enumeration covers 1..{MAX_BUILTIN_ORDER}; "
                "pass --stream for other orders"
            )
        graphs = list(enumerate_connected_graphs(args.n))
        n = args.n
    else:
        if args.stream == "-":
            lines = [line.strip() for line in sys.stdin]
        else:
            try:
                with open(args.stream, encoding="ascii") as handle:
                    lines = [line.strip() for line in handle]
            except OSError as exc:
                print(exc, file=sys.stderr)
                return EXIT_PARSE
        graphs = []
        for index, line in enumerate(lines, start=1):
            if not line:
                continue
            try:
                graphs.append(parse_graph6(line))
            except GraphFormatError as exc:
                record_errors.append(f"record {index}: {exc}")
        if args.n is not None:
            n = args.n
        elif graphs:
            n = graphs[0].n
        else:
            print("stream contains no parsable records", file=sys.stderr)
            return EXIT_PARSE

    report = run_harness(
        graphs,
        n,
        solver=args.solver,
        jobs=args.jobs,
        record_errors=record_errors,
    )
    if args.format == "structured":
        print(report.to_json())
    else:
        print(report.to_text())
    if report.theorem_holds and report.violations == 0:
        return EXIT_OK
    return EXIT_VIOLATION


def _build_parser() -> _Parser:
    parser = _Parser(prog="oldset", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser(
        "solve", help="exact gamma_OL, witness, and forced partition"
    )
    solve.add_argument("graphs", nargs="*", help="graph6 records, or files of them")
    solve.add_argument(
        "--solver",
        choices=(BRUTEFORCE, "bnb"),
        default="bnb",
        help="exact algorithm (default bnb)",
    )
    solve.add_argument(
        "--format", choices=("text", "structured"), default="text"
    )
    solve.set_defaults(entry=_cmd_solve)

    gen = commands.add_parser("gen", help="emit the half-graph H_k as graph6")
    gen.add_argument("--k", type=_positive, required=True, help="half-graph index")
    gen.set_defaults(entry=_cmd_gen)

    recognize = commands.add_parser(
        "recognize", help="decide half-graph structure, with labeling"
    )
    recognize.add_argument(
        "graphs", nargs="*", help="graph6 records, or files of them"
    )
    recognize.add_argument(
        "--format", choices=("text", "structured"), default="text"
    )
    recognize.set_defaults(entry=_cmd_recognize)

    verify = commands.add_parser(
        "verify", help="run the extremal-characterisation harness"
    )
    verify.add_argument(
        "--n", type=_positive, help="sweep all connected graphs of this order"
    )
    verify.add_argument(
        "--stream", help="file of graph6 records to sweep instead ('-' for stdin)"
    )
    verify.add_argument(
        "--solver",
        choices=(BRUTEFORCE, "bnb"),
        default="bnb",
        help="exact algorithm (default bnb)",
    )
    verify.add_argument(
        "--format", choices=("text", "structured"), default="text"
    )
    verify.add_argument(
        "--jobs", type=_positive, default=1, help="worker processes"
    )
    verify.set_defaults(entry=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.entry(args)
    except _UsageError as exc:
        print(f"oldset: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
