"""Witness-producing solvers.

Each solver returns its answer together with a witness that the matching
checker module can verify independently; tests never trust a solver run
that the corresponding checker has not accepted. Tie-breaking is
deterministic everywhere (lowest vertex id, then lowest edge id), so
solver output is reproducible byte for byte.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Generic, Sequence, TypeVar

from . import blossom
from .connectivity import ConnectivityWitness, CutWitness, SpanningTreeWitness
from .extnat import INFINITY, ExtNat
from .graph import (
    Graph,
    has_no_duplicate_edges,
    has_no_self_loops,
    wellformed,
)
from .matching import MatchingWitness
from .shortest_paths import SpWitness
from .verdict import PreconditionError

Y = TypeVar("Y")
W = TypeVar("W")


@dataclass(frozen=True)
class SolverResult(Generic[Y, W]):
    """An answer plus the witness that certifies it."""

    output: Y
    witness: W


class EmptyGraphError(PreconditionError):
    """The solver needs at least one vertex."""


class SourceOutOfRangeError(PreconditionError):
    """The requested source is not a vertex of the graph."""


def solve_connectivity(g: Graph) -> SolverResult[bool, ConnectivityWitness]:
    """Breadth-first search from vertex 0; edges are traversable both ways.

    Connected graphs yield a spanning tree rooted at 0 whose depth numbers
    are the BFS levels; disconnected graphs yield the cut consisting of
    everything reachable from 0.
    """
    if not wellformed(g):
        raise PreconditionError("wellformed", "edge endpoint out of range")
    n = g.num_verts
    if n == 0:
        raise EmptyGraphError("empty_graph", "need at least one vertex")
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, e in enumerate(g.edges):
        incident[e.src].append((i, e.trg))
        incident[e.trg].append((i, e.src))
    parent_edge: list[int | None] = [None] * n
    num = [0] * n
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for i, u in incident[v]:
            if not seen[u]:
                seen[u] = True
                parent_edge[u] = i
                num[u] = num[v] + 1
                queue.append(u)
                reached += 1
    if reached == n:
        witness: ConnectivityWitness = SpanningTreeWitness(0, parent_edge, num)
        return SolverResult(True, witness)
    cut = CutWitness(frozenset(v for v in range(n) if seen[v]))
    return SolverResult(False, cut)


def solve_shortest_paths(
    g: Graph, cost: Sequence[int], source: int
) -> SolverResult[tuple[ExtNat, ...], SpWitness]:
    """Dijkstra's algorithm with a binary heap; exact integer arithmetic.

    Zero-cost edges are fine: parents are only reassigned on strict
    improvement, so the parent pointers always form a tree, and the depth
    numbers are recomputed from that tree after the run.
    """
    if not wellformed(g):
        raise PreconditionError("wellformed", "edge endpoint out of range")
    n = g.num_verts
    if not 0 <= source < n:
        raise SourceOutOfRangeError("source", f"source {source} is not a vertex")
    if len(cost) != g.num_edges:
        raise PreconditionError("cost_shape", "need one cost per edge")
    if any(c < 0 for c in cost):
        raise PreconditionError("cost_negative", "costs must be nonnegative")
    out_edges: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, e in enumerate(g.edges):
        out_edges[e.src].append((i, e.trg))
    dist: list[int | None] = [None] * n
    parent_edge: list[int | None] = [None] * n
    dist[source] = 0
    done = [False] * n
    heap: list[tuple[int, int]] = [(0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = True
        for i, u in out_edges[v]:
            nd = d + cost[i]
            du = dist[u]
            if du is None or nd < du:
                dist[u] = nd
                parent_edge[u] = i
                heapq.heappush(heap, (nd, u))
    num = _tree_depths(g, dist, parent_edge, source)
    witness = SpWitness(
        source=source,
        dist=tuple(ExtNat(d) for d in dist),
        num=num,
        parent_edge=tuple(parent_edge),
        cost=tuple(cost),
    )
    return SolverResult(witness.dist, witness)


def _tree_depths(
    g: Graph,
    dist: list[int | None],
    parent_edge: list[int | None],
    source: int,
) -> tuple[ExtNat, ...]:
    depth: list[int | None] = [None] * g.num_verts
    depth[source] = 0
    for v in range(g.num_verts):
        if dist[v] is None or depth[v] is not None:
            continue
        chain = []
        x = v
        while depth[x] is None:
            chain.append(x)
            x = g.edges[parent_edge[x]].src
        base = depth[x]
        for steps, y in enumerate(reversed(chain), start=1):
            depth[y] = base + steps
    return tuple(INFINITY if d is None else ExtNat(d) for d in depth)


def solve_max_matching(g: Graph) -> SolverResult[Graph, MatchingWitness]:
    """Blossom search plus an odd-set cover read off the final forest.

    The returned matching M reuses the graph's own edge records (lowest
    edge id per matched pair), so the witness's edge map is trivially
    valid; the cover labels certify maximality.
    """
    if not wellformed(g):
        raise PreconditionError("wellformed", "edge endpoint out of range")
    if not has_no_self_loops(g):
        raise PreconditionError("self_loops", "G has a self-loop")
    if not has_no_duplicate_edges(g):
        raise PreconditionError("duplicate_edges", "G has a duplicate edge")
    edge_ids, labels = blossom.maximum_matching_with_cover(g)
    m = Graph(g.num_verts, [g.edges[i] for i in edge_ids])
    witness = MatchingWitness(m, edge_ids, labels)
    return SolverResult(m, witness)


def solve_gcd(a: int, b: int) -> SolverResult[int, tuple[int, int]]:
    """Extended Euclid: gcd plus Bezout coefficients, all exact."""
    if a < 0 or b < 0:
        raise PreconditionError("nonneg_inputs", "a and b must be nonnegative")
    if a + b == 0:
        raise PreconditionError("not_both_zero", "gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return SolverResult(old_r, (old_s, old_t))
