"""Witness checker for maximum-cardinality matching.

The witness for "M is a maximum matching in G" is an odd-set cover: a
nonnegative label per vertex such that every edge either has an endpoint
labeled 1 or has both endpoints sharing a label >= 2. Writing n_i for the
number of vertices labeled i, any matching N satisfies

    |N| <= n_1 + sum over i >= 2 of floor(n_i / 2)

because each label-1 vertex saturates at most one N-edge and the vertices
sharing label i can pairwise host at most floor(n_i / 2) N-edges. A cover
whose bound equals |M| therefore proves M maximum.

The matching is itself a graph over the same vertex set, plus a map ``f``
sending each M-edge to a G-edge with the same endpoints. Checking that map
is not optional: a checker that skips it will happily certify a "matching"
containing edges absent from G, whose cardinality can exceed the true
maximum (a bug of exactly this shape shipped in a widely used library's
checker; the regression test pins it).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, has_no_duplicate_edges, has_no_self_loops, wellformed
from .verdict import ACCEPT, PreconditionError, Verdict, reject


@dataclass(frozen=True)
class MatchingWitness:
    """The claimed matching M, the M-edge-to-G-edge map, and the cover labels."""

    matching: Graph
    edge_map: tuple[int, ...]
    osc: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge_map", tuple(self.edge_map))
        object.__setattr__(self, "osc", tuple(self.osc))
        if any(l < 0 for l in self.osc):
            raise ValueError("cover labels must be nonnegative")


@dataclass(frozen=True)
class MatchingTriple:
    graph: Graph
    witness: MatchingWitness


def check_subset(g: Graph, m: Graph, f: Sequence[int]) -> bool:
    """True iff ``f`` maps every M-edge to a G-edge with the same endpoints.

    Orientation may differ: an M-edge (u, v) may map to a G-edge (v, u).
    Expects ``f`` to have one entry per M-edge.
    """
    return _subset_violation(g, m, f) is None


def check_matching(m: Graph) -> bool:
    """True iff no vertex is an endpoint of two edges of ``m``."""
    return _matching_violation(m) is None


def check_osc(g: Graph, osc: Sequence[int]) -> bool:
    """True iff the labels are in range and cover every edge of ``g``.

    In range means ``0 <= osc[v] < g.num_verts``. An edge is covered when
    an endpoint is labeled 1 or both endpoints share a label >= 2.
    """
    return _osc_violation(g, osc) is None


def weight(g: Graph, osc: Sequence[int]) -> int:
    """The cover's matching bound: n_1 + sum of floor(n_i / 2) for i >= 2.

    Computed in unbounded integers over the labels that actually occur;
    absent labels contribute 0, so summing to the maximum occurring label
    equals summing over every label value. The result never exceeds
    ``g.num_verts``.
    """
    counts = Counter(osc)
    return counts[1] + sum(c // 2 for label, c in counts.items() if label >= 2)


def check_max_matching(t: MatchingTriple) -> Verdict:
    """Decide whether the cover proves the claimed matching maximum.

    Raises :class:`PreconditionError` unless both graphs are wellformed
    over the same vertex set, neither has self-loops, and the input graph
    has no duplicate (ordered) edges.
    """
    g, w = t.graph, t.witness
    m = w.matching
    require_matching_inputs(g, m)
    if len(w.edge_map) != m.num_edges or len(w.osc) != g.num_verts:
        return reject("witness_shape", "edge map must match M, labels must match G")
    bad = _subset_violation(g, m, w.edge_map)
    if bad is not None:
        return reject("subset", bad)
    bad = _matching_violation(m)
    if bad is not None:
        return reject("matching", bad)
    bad = _osc_violation(g, w.osc)
    if bad is not None:
        return reject("osc", bad)
    if m.num_edges != weight(g, w.osc):
        return reject(
            "cardinality",
            f"|M| = {m.num_edges} but the cover bounds matchings by {weight(g, w.osc)}",
        )
    return ACCEPT


def require_matching_inputs(g: Graph, m: Graph) -> None:
    """Raise :class:`PreconditionError` unless (G, M) satisfy the precondition."""
    if not wellformed(g):
        raise PreconditionError("wellformed", "G has an endpoint out of range")
    if not wellformed(m):
        raise PreconditionError("wellformed_matching", "M has an endpoint out of range")
    if not has_no_self_loops(g):
        raise PreconditionError("self_loops", "G has a self-loop")
    if not has_no_self_loops(m):
        raise PreconditionError("self_loops_matching", "M has a self-loop")
    if not has_no_duplicate_edges(g):
        raise PreconditionError("duplicate_edges", "G has a duplicate edge")
    if m.num_verts != g.num_verts:
        raise PreconditionError("vertex_count", "M and G must share the vertex set")


def _subset_violation(g: Graph, m: Graph, f: Sequence[int]) -> str | None:
    if len(f) != m.num_edges:
        return "edge map length differs from M"
    for i, e in enumerate(m.edges):
        fe = f[i]
        if not 0 <= fe < g.num_edges:
            return f"M-edge {i} maps outside G"
        ge = g.edges[fe]
        if {e.src, e.trg} != {ge.src, ge.trg}:
            return f"M-edge {i} and G-edge {fe} have different endpoints"
    return None


def _matching_violation(m: Graph) -> str | None:
    degree = [0] * m.num_verts
    for i, e in enumerate(m.edges):
        if degree[e.src] or degree[e.trg]:
            return f"edge {i} shares an endpoint with an earlier edge"
        degree[e.src] = 1
        degree[e.trg] = 1
    return None


def _osc_violation(g: Graph, osc: Sequence[int]) -> str | None:
    n = g.num_verts
    for v in range(n):
        if not 0 <= osc[v] < n:
            return f"label of vertex {v} out of range"
    for i, e in enumerate(g.edges):
        a, b = osc[e.src], osc[e.trg]
        if a == 1 or b == 1:
            continue
        if a == b and a >= 2:
            continue
        return f"edge {i} is not covered"
    return None
