"""Plain-text file formats for graphs, witnesses, and gcd instances.

All files are line-based with whitespace-separated tokens. Trailing
whitespace and trailing blank lines are tolerated; anything else is
rejected with a line number. ``-`` encodes a missing parent edge and
``INF`` an infinite value; negative integers are rejected everywhere
except the Bezout coefficients of a gcd line, which are signed by nature.

Formats (first line is a tag line):

* graph:     ``graph <n> <m>`` then m lines ``<src> <trg>`` or
  ``<src> <trg> <cost>`` (arity uniform across the file)
* tree:      ``tree <root>`` then n lines ``<edge-id|-> <num>``
* cut:       ``cut <k>`` then k lines ``<vertex>``
* sp:        ``sp <source>`` then n lines ``<dist|INF> <num|INF> <edge-id|->``
* matching:  ``matching <m_M>`` then m_M lines ``<src> <trg> <f>`` then one
  line of n labels (omitted when n = 0)
* gcd:       ``gcd <a> <b> <g> <s> <t>``

Edge costs live in the graph file; shortest-path witness files reference
them implicitly, so parsing one requires the graph (and its costs).
"""

from __future__ import annotations

from .connectivity import ConnectivityWitness, CutWitness, SpanningTreeWitness
from .extnat import INFINITY, ExtNat
from .gcd import GcdTriple
from .graph import Graph
from .matching import MatchingWitness
from .shortest_paths import SpWitness
from .verdict import PreconditionError


class ParseError(ValueError):
    """The file does not conform to its format."""


class LengthMismatchError(ParseError):
    """A declared count disagrees with the number of records present."""


class WellformednessError(PreconditionError):
    """A graph file names an endpoint outside its own vertex range."""


_Rows = list[tuple[int, list[str]]]


def _rows(text: str) -> _Rows:
    rows = [(i, raw.split()) for i, raw in enumerate(text.splitlines(), start=1)]
    while rows and not rows[-1][1]:
        rows.pop()
    for lineno, toks in rows:
        if not toks:
            raise ParseError(f"line {lineno}: blank line inside the file")
    return rows


def _nat(token: str, lineno: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise ParseError(f"line {lineno}: expected a nonnegative integer, got {token!r}")
    return int(token)


def _signed(token: str, lineno: int) -> int:
    body = token[1:] if token.startswith("-") else token
    if not (body and body.isascii() and body.isdigit()):
        raise ParseError(f"line {lineno}: expected an integer, got {token!r}")
    return int(token)


def _tag_row(rows: _Rows, tag: str, values: int) -> list[int]:
    if not rows:
        raise ParseError("line 1: empty file")
    lineno, toks = rows[0]
    if len(toks) != values + 1 or toks[0] != tag:
        raise ParseError(
            f"line {lineno}: expected '{tag}' followed by {values} value(s)"
        )
    return [_nat(tok, lineno) for tok in toks[1:]]


def _body(rows: _Rows, expected: int, what: str) -> _Rows:
    body = rows[1:]
    if len(body) != expected:
        raise LengthMismatchError(
            f"expected {expected} {what} line(s), found {len(body)}"
        )
    return body


def _opt_edge_id(token: str, lineno: int) -> int | None:
    return None if token == "-" else _nat(token, lineno)


def _ext_nat(token: str, lineno: int) -> ExtNat:
    return INFINITY if token == "INF" else ExtNat(_nat(token, lineno))


def parse_graph(text: str) -> tuple[Graph, tuple[int, ...] | None]:
    """Parse a graph file; returns the graph and its costs, if present."""
    rows = _rows(text)
    n, m = _tag_row(rows, "graph", 2)
    body = _body(rows, m, "edge")
    edges: list[tuple[int, int]] = []
    costs: list[int] = []
    arity: int | None = None
    for lineno, toks in body:
        if len(toks) not in (2, 3):
            raise ParseError(f"line {lineno}: expected 'src trg' or 'src trg cost'")
        if arity is None:
            arity = len(toks)
        elif len(toks) != arity:
            raise ParseError(f"line {lineno}: mixed cost/no-cost edge lines")
        src, trg = _nat(toks[0], lineno), _nat(toks[1], lineno)
        if src >= n or trg >= n:
            raise WellformednessError(
                "wellformed", f"line {lineno}: endpoint out of range for {n} vertices"
            )
        edges.append((src, trg))
        if arity == 3:
            costs.append(_nat(toks[2], lineno))
    return Graph(n, edges), tuple(costs) if arity == 3 else None


def parse_connectivity_witness(text: str, g: Graph) -> ConnectivityWitness:
    """Parse a tree or cut witness file (the tag line says which)."""
    rows = _rows(text)
    if rows and rows[0][1] and rows[0][1][0] == "cut":
        (k,) = _tag_row(rows, "cut", 1)
        body = _body(rows, k, "cut vertex")
        members = []
        for lineno, toks in body:
            if len(toks) != 1:
                raise ParseError(f"line {lineno}: expected one vertex id")
            members.append(_nat(toks[0], lineno))
        return CutWitness(frozenset(members))
    (root,) = _tag_row(rows, "tree", 1)
    body = _body(rows, g.num_verts, "vertex")
    parent_edge: list[int | None] = []
    num: list[int] = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected '<edge-id|-> <num>'")
        parent_edge.append(_opt_edge_id(toks[0], lineno))
        num.append(_nat(toks[1], lineno))
    return SpanningTreeWitness(root, parent_edge, num)


def parse_sp_witness(text: str, g: Graph, cost: tuple[int, ...]) -> SpWitness:
    """Parse a shortest-path witness; costs come from the graph file."""
    rows = _rows(text)
    (source,) = _tag_row(rows, "sp", 1)
    body = _body(rows, g.num_verts, "vertex")
    dist: list[ExtNat] = []
    num: list[ExtNat] = []
    parent_edge: list[int | None] = []
    for lineno, toks in body:
        if len(toks) != 3:
            raise ParseError(f"line {lineno}: expected '<dist|INF> <num|INF> <edge-id|->'")
        dist.append(_ext_nat(toks[0], lineno))
        num.append(_ext_nat(toks[1], lineno))
        parent_edge.append(_opt_edge_id(toks[2], lineno))
    return SpWitness(source, dist, num, parent_edge, cost)


def parse_matching_witness(text: str, g: Graph) -> MatchingWitness:
    """Parse a matching witness: M's edges, the edge map, and the labels."""
    rows = _rows(text)
    (m_edges,) = _tag_row(rows, "matching", 1)
    label_rows = 1 if g.num_verts > 0 else 0
    body = _body(rows, m_edges + label_rows, "witness")
    edges: list[tuple[int, int]] = []
    edge_map: list[int] = []
    for lineno, toks in body[:m_edges]:
        if len(toks) != 3:
            raise ParseError(f"line {lineno}: expected '<src> <trg> <f>'")
        edges.append((_nat(toks[0], lineno), _nat(toks[1], lineno)))
        edge_map.append(_nat(toks[2], lineno))
    labels: list[int] = []
    if label_rows:
        lineno, toks = body[m_edges]
        if len(toks) != g.num_verts:
            raise LengthMismatchError(
                f"line {lineno}: expected {g.num_verts} labels, found {len(toks)}"
            )
        labels = [_nat(tok, lineno) for tok in toks]
    return MatchingWitness(Graph(g.num_verts, edges), edge_map, labels)


def parse_gcd_line(text: str) -> GcdTriple:
    """Parse a one-line gcd instance ``gcd a b g s t``."""
    rows = _rows(text)
    if len(rows) != 1:
        raise ParseError("expected a single 'gcd a b g s t' line")
    lineno, toks = rows[0]
    if len(toks) != 6 or toks[0] != "gcd":
        raise ParseError(f"line {lineno}: expected 'gcd a b g s t'")
    a, b, g = (_nat(tok, lineno) for tok in toks[1:4])
    s, t = (_signed(tok, lineno) for tok in toks[4:6])
    return GcdTriple(a, b, g, s, t)


def serialize_graph(g: Graph, cost: tuple[int, ...] | None = None) -> str:
    lines = [f"graph {g.num_verts} {g.num_edges}"]
    for i, e in enumerate(g.edges):
        lines.append(
            f"{e.src} {e.trg}" if cost is None else f"{e.src} {e.trg} {cost[i]}"
        )
    return "\n".join(lines) + "\n"


def serialize_connectivity_witness(w: ConnectivityWitness) -> str:
    if isinstance(w, CutWitness):
        members = sorted(w.cut_set)
        return "\n".join([f"cut {len(members)}"] + [str(v) for v in members]) + "\n"
    lines = [f"tree {w.root}"]
    for e, k in zip(w.parent_edge, w.num):
        lines.append(f"{'-' if e is None else e} {k}")
    return "\n".join(lines) + "\n"


def serialize_sp_witness(w: SpWitness) -> str:
    lines = [f"sp {w.source}"]
    for d, k, e in zip(w.dist, w.num, w.parent_edge):
        lines.append(f"{d} {k} {'-' if e is None else e}")
    return "\n".join(lines) + "\n"


def serialize_matching_witness(w: MatchingWitness) -> str:
    lines = [f"matching {w.matching.num_edges}"]
    for e, f in zip(w.matching.edges, w.edge_map):
        lines.append(f"{e.src} {e.trg} {f}")
    if w.matching.num_verts > 0:
        lines.append(" ".join(str(l) for l in w.osc))
    return "\n".join(lines) + "\n"


def serialize_gcd(t: GcdTriple) -> str:
    return f"gcd {t.a} {t.b} {t.g} {t.s} {t.t}\n"
