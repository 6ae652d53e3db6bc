"""Edge-list graphs and the structural predicates shared by all checkers.

A graph is a vertex count n plus a sequence of edge records; vertices are
``0 .. n-1`` and edges are referred to by their index in the sequence.
Undirected graphs use one record per edge and readers interpret it
symmetrically; directed graphs read ``src -> trg`` as written. Nothing in
the representation forbids self-loops, duplicate edges, or out-of-range
endpoints: those are predicates over a graph, checked where they matter,
never silently assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence


class Edge(NamedTuple):
    src: int
    trg: int


@dataclass(frozen=True)
class Graph:
    """An edge-list graph; ``edges`` may be given as any iterable of pairs."""

    num_verts: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.num_verts < 0:
            raise ValueError(f"num_verts must be nonnegative, got {self.num_verts}")
        object.__setattr__(self, "edges", tuple(Edge(s, t) for s, t in self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def wellformed(g: Graph) -> bool:
    """True iff every edge endpoint is a vertex of ``g``."""
    n = g.num_verts
    return all(0 <= e.src < n and 0 <= e.trg < n for e in g.edges)


def has_no_self_loops(g: Graph) -> bool:
    return all(e.src != e.trg for e in g.edges)


def has_no_duplicate_edges(g: Graph) -> bool:
    """True iff no ordered (src, trg) pair occurs twice.

    (0, 1) and (1, 0) do not count as duplicates of each other; use
    :func:`has_no_duplicate_edges_undirected` for the orientation-blind test.
    """
    return len(set(g.edges)) == g.num_edges


def has_no_duplicate_edges_undirected(g: Graph) -> bool:
    """True iff no unordered endpoint pair occurs twice."""
    seen = {frozenset((e.src, e.trg)) for e in g.edges}
    return len(seen) == g.num_edges


def is_edge_undirected(g: Graph, u: int, v: int) -> bool:
    """True iff some edge joins u and v in either orientation."""
    return any(
        (e.src == u and e.trg == v) or (e.src == v and e.trg == u) for e in g.edges
    )


def is_walk(g: Graph, p: Sequence[int], u: int, v: int) -> bool:
    """True iff edge-id sequence ``p`` is a directed walk from u to v.

    The empty sequence is a walk from u to u. Each id must name an edge of
    ``g``, the first edge must start at u, consecutive edges must chain
    target-to-source, and the last edge must end at v.
    """
    cur = u
    for e in p:
        if not 0 <= e < g.num_edges or g.edges[e].src != cur:
            return False
        cur = g.edges[e].trg
    return cur == v


def is_path(g: Graph, p: Sequence[int], u: int, v: int) -> bool:
    """True iff ``p`` is a walk from u to v visiting no vertex twice.

    The visited sequence is u followed by the target of each edge.
    """
    if not is_walk(g, p, u, v):
        return False
    visited = [u] + [g.edges[e].trg for e in p]
    return len(set(visited)) == len(visited)


def path_cost(cost: Sequence[int], p: Sequence[int]) -> int:
    """Total cost of the edges of ``p`` (0 for the empty walk)."""
    return sum(cost[e] for e in p)
