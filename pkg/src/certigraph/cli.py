"""Command-line driver.

``check-*`` commands read a graph file and a witness file (or a single gcd
file), print exactly one line, and exit 0 on ACCEPT, 1 on REJECT, and 2 on
any parse or precondition error. ``solve-*`` commands read an input, write
a witness file in the same formats, and exit 0, or 2 on bad input. The
stdout lines ``ACCEPT`` / ``REJECT: <clause>`` / ``ERROR: <reason>`` are a
stable interface.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .connectivity import ConnectivityTriple, SpanningTreeWitness, check_connectivity
from .gcd import GcdTriple, check_gcd
from .matching import MatchingTriple, check_max_matching
from .shortest_paths import SpTriple, check_shortest_paths
from .solvers import (
    solve_connectivity,
    solve_gcd,
    solve_max_matching,
    solve_shortest_paths,
)
from .verdict import PreconditionError, Verdict


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


def cli_main(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.run(args)
    except (formats.ParseError, PreconditionError, OSError) as exc:
        print(f"ERROR: {exc}")
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="certigraph",
        description="Check witnesses for graph answers, or solve and emit witnesses.",
    )
    sub = parser.add_subparsers(required=True, metavar="command")

    def checker(name: str, help_: str, run, files: list[str]):
        p = sub.add_parser(name, help=help_)
        for f in files:
            p.add_argument(f)
        p.set_defaults(run=run)
        return p

    checker(
        "check-connected",
        "verify a spanning-tree or cut witness",
        _check_connected,
        ["graph_file", "witness_file"],
    )
    checker(
        "check-sp",
        "verify a shortest-path witness (graph file must carry costs)",
        _check_sp,
        ["graph_file", "witness_file"],
    )
    checker(
        "check-matching",
        "verify a maximum-matching witness",
        _check_matching,
        ["graph_file", "witness_file"],
    )
    checker("check-gcd", "verify a gcd witness line", _check_gcd, ["gcd_file"])

    def solver(name: str, help_: str, run):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-o", "--output", help="write the witness here instead of stdout")
        p.set_defaults(run=run)
        return p

    p = solver("solve-connected", "emit a spanning tree or a cut", _solve_connected)
    p.add_argument("graph_file")
    p = solver("solve-sp", "emit a shortest-path witness", _solve_sp)
    p.add_argument("graph_file")
    p.add_argument("source", type=int)
    p = solver("solve-matching", "emit a maximum matching plus cover", _solve_matching)
    p.add_argument("graph_file")
    p = solver("solve-gcd", "emit a gcd witness line", _solve_gcd)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    return parser


def _verdict_to_exit(v: Verdict) -> int:
    if v.accepted:
        print("ACCEPT")
        return 0
    print(f"REJECT: {v.clause}")
    return 1


def _emit(text: str, args: argparse.Namespace) -> int:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _check_connected(args: argparse.Namespace) -> int:
    g, _ = formats.parse_graph(Path(args.graph_file).read_text())
    w = formats.parse_connectivity_witness(Path(args.witness_file).read_text(), g)
    triple = ConnectivityTriple(g, isinstance(w, SpanningTreeWitness), w)
    return _verdict_to_exit(check_connectivity(triple))


def _check_sp(args: argparse.Namespace) -> int:
    g, cost = formats.parse_graph(Path(args.graph_file).read_text())
    if cost is None:
        # A zero-edge graph has the (empty) cost vector whether or not a
        # cost column is present; with edges, the column is mandatory.
        if g.num_edges > 0:
            raise formats.ParseError(
                "check-sp needs explicit edge costs in the graph file"
            )
        cost = ()
    w = formats.parse_sp_witness(Path(args.witness_file).read_text(), g, cost)
    return _verdict_to_exit(check_shortest_paths(SpTriple(g, w)))


def _check_matching(args: argparse.Namespace) -> int:
    g, _ = formats.parse_graph(Path(args.graph_file).read_text())
    w = formats.parse_matching_witness(Path(args.witness_file).read_text(), g)
    return _verdict_to_exit(check_max_matching(MatchingTriple(g, w)))


def _check_gcd(args: argparse.Namespace) -> int:
    triple = formats.parse_gcd_line(Path(args.gcd_file).read_text())
    return _verdict_to_exit(check_gcd(triple))


def _solve_connected(args: argparse.Namespace) -> int:
    g, _ = formats.parse_graph(Path(args.graph_file).read_text())
    result = solve_connectivity(g)
    return _emit(formats.serialize_connectivity_witness(result.witness), args)


def _solve_sp(args: argparse.Namespace) -> int:
    g, cost = formats.parse_graph(Path(args.graph_file).read_text())
    if cost is None:
        cost = (1,) * g.num_edges
    result = solve_shortest_paths(g, cost, args.source)
    return _emit(formats.serialize_sp_witness(result.witness), args)


def _solve_matching(args: argparse.Namespace) -> int:
    g, _ = formats.parse_graph(Path(args.graph_file).read_text())
    result = solve_max_matching(g)
    return _emit(formats.serialize_matching_witness(result.witness), args)


def _solve_gcd(args: argparse.Namespace) -> int:
    result = solve_gcd(args.a, args.b)
    s, t = result.witness
    return _emit(formats.serialize_gcd(GcdTriple(args.a, args.b, result.output, s, t)), args)
