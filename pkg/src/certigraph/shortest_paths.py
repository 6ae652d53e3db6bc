"""Witness checker for single-source shortest paths with nonnegative costs.

The witness carries, per vertex, a claimed distance, a depth number, and a
parent edge. Four local conditions together force the distances to be
exactly the true shortest-path distances:

* ``start_val``: the source has distance 0;
* ``no_path``: distance and depth are infinite for the same vertices;
* ``trian``: no edge can improve a distance (so dist is a lower-bounded
  fixpoint: dist[v] <= true distance everywhere);
* ``just``: every reached non-source vertex is justified by a parent edge
  whose source lies one depth level up, at exactly the claimed distance.

The depth numbers are not redundant. With zero-cost edges, a cycle of
justifications can confirm arbitrarily small distances while every ``dist``
equality holds; the strictly decreasing depth chain is what rules such
cycles out. Dropping the depth conjunct makes the checker unsound (see the
acceptance tests for a forged witness it would accept).

All arithmetic is exact: distances are :class:`~certigraph.extnat.ExtNat`
(unbounded naturals plus infinity), so no comparison ever overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extnat import ExtNat
from .graph import Graph, wellformed
from .verdict import ACCEPT, PreconditionError, Verdict, reject


@dataclass(frozen=True)
class SpWitness:
    """Claimed shortest-path data for every vertex, plus the edge costs.

    ``dist`` and ``num`` have one ExtNat per vertex, ``parent_edge`` one
    optional edge id per vertex, ``cost`` one nonnegative integer per edge.
    """

    source: int
    dist: tuple[ExtNat, ...]
    num: tuple[ExtNat, ...]
    parent_edge: tuple[int | None, ...]
    cost: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dist", tuple(self.dist))
        object.__setattr__(self, "num", tuple(self.num))
        object.__setattr__(self, "parent_edge", tuple(self.parent_edge))
        object.__setattr__(self, "cost", tuple(self.cost))
        if any(c < 0 for c in self.cost):
            raise ValueError("edge costs must be nonnegative")


@dataclass(frozen=True)
class SpTriple:
    graph: Graph
    witness: SpWitness


def check_start_val(w: SpWitness) -> bool:
    """True iff the source's claimed distance is exactly 0."""
    return 0 <= w.source < len(w.dist) and w.dist[w.source] == ExtNat(0)


def check_no_path(g: Graph, w: SpWitness) -> bool:
    """True iff dist[v] is infinite exactly when num[v] is infinite."""
    return all(
        w.dist[v].is_infinite == w.num[v].is_infinite for v in range(g.num_verts)
    )


def check_trian(g: Graph, w: SpWitness) -> bool:
    """True iff every edge satisfies dist[trg] <= dist[src] + cost."""
    return _trian_violation(g, w) is None


def check_just(g: Graph, w: SpWitness) -> bool:
    """True iff every reached non-source vertex is justified by its parent edge.

    Reached means num[v] is finite. The parent edge must end at v, start
    one depth level up, and account exactly for the claimed distance.
    """
    return _just_violation(g, w) is None


def check_shortest_paths(t: SpTriple) -> Verdict:
    """Decide the shortest-path witness predicate for the triple.

    Raises :class:`PreconditionError` if the graph is malformed or the
    source is not a vertex.
    """
    g, w = t.graph, t.witness
    if not wellformed(g):
        raise PreconditionError("wellformed", "edge endpoint out of range")
    if not 0 <= w.source < g.num_verts:
        raise PreconditionError("source", f"source {w.source} is not a vertex")
    n, m = g.num_verts, g.num_edges
    if (
        len(w.dist) != n
        or len(w.num) != n
        or len(w.parent_edge) != n
        or len(w.cost) != m
    ):
        return reject("witness_shape", "arrays must have length n (per-vertex) and m (cost)")
    if not check_start_val(w):
        return reject("start_val", f"dist[{w.source}] != 0")
    if not check_no_path(g, w):
        return reject("no_path", "dist and num disagree on reachability")
    bad = _trian_violation(g, w)
    if bad is not None:
        return reject("trian", bad)
    bad = _just_violation(g, w)
    if bad is not None:
        return reject("just", bad)
    return ACCEPT


def _trian_violation(g: Graph, w: SpWitness) -> str | None:
    for i, e in enumerate(g.edges):
        if not w.dist[e.trg] <= w.dist[e.src] + w.cost[i]:
            return f"edge {i} improves dist[{e.trg}]"
    return None


def _just_violation(g: Graph, w: SpWitness) -> str | None:
    for v in range(g.num_verts):
        if v == w.source or w.num[v].is_infinite:
            continue
        e = w.parent_edge[v]
        if e is None or not 0 <= e < g.num_edges:
            return f"vertex {v}: parent edge missing or out of range"
        u, trg = g.edges[e]
        if trg != v:
            return f"vertex {v}: parent edge {e} does not end at it"
        if w.dist[v] != w.dist[u] + w.cost[e]:
            return f"vertex {v}: dist not justified by parent edge {e}"
        if w.num[v] != w.num[u] + 1:
            return f"vertex {v}: num not one more than its parent's"
    return None
