"""Brute-force ground truth, deliberately dissimilar from the solvers.

Everything here exists to catch bugs in the fast paths, so each oracle
uses a different algorithm than the solver it cross-checks: transitive
closure instead of breadth-first search, Bellman-Ford relaxation instead
of Dijkstra's heap, exhaustive enumeration instead of blossom search. The
quantified witness predicates are also evaluated here directly, as single
boolean expressions, to test the checkers' early-exit loops against the
definitions they implement.

Exhaustive routines take explicit size guards with conservative defaults
and raise :class:`InstanceTooLargeError` beyond them.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .connectivity import ConnectivityTriple, CutWitness, SpanningTreeWitness
from .extnat import INFINITY, ExtNat
from .gcd import GcdTriple
from .graph import Graph, wellformed
from .matching import MatchingTriple, MatchingWitness, require_matching_inputs
from .shortest_paths import SpTriple
from .verdict import PreconditionError


class InstanceTooLargeError(ValueError):
    """The instance exceeds the configured exhaustive-search bound."""


def oracle_connected(g: Graph) -> bool:
    """Connectivity by transitive closure of the symmetrized edge relation.

    Reachability rows are bitmasks; the closure is computed by repeatedly
    merging row k into every row that can reach k. The empty graph is
    vacuously connected (every vertex pair is mutually reachable).
    """
    n = g.num_verts
    reach = [1 << i for i in range(n)]
    for e in g.edges:
        reach[e.src] |= 1 << e.trg
        reach[e.trg] |= 1 << e.src
    for k in range(n):
        bit = 1 << k
        row = reach[k]
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= row
    full = (1 << n) - 1
    return all(row == full for row in reach)


def oracle_mu(g: Graph, cost: Sequence[int], source: int) -> tuple[ExtNat, ...]:
    """Exact shortest-path distances by Bellman-Ford relaxation over ExtNat.

    With nonnegative costs, n - 1 full relaxation rounds reach the fixpoint;
    rounds stop early once nothing changes. Unreachable vertices stay at
    infinity.
    """
    n = g.num_verts
    dist = [INFINITY] * n
    dist[source] = ExtNat(0)
    for _ in range(max(n - 1, 1)):
        changed = False
        for i, e in enumerate(g.edges):
            candidate = dist[e.src] + cost[i]
            if candidate < dist[e.trg]:
                dist[e.trg] = candidate
                changed = True
        if not changed:
            break
    return tuple(dist)


def oracle_max_matching_size(g: Graph, max_edges: int = 20) -> int:
    """Maximum matching cardinality by pruned exhaustive enumeration.

    Branches on the lowest undecided vertex: leave it unmatched, or match
    it with each still-free neighbor. Every matching is visited (up to
    pruning branches that provably cannot beat the best found).
    """
    if g.num_edges > max_edges:
        raise InstanceTooLargeError(
            f"{g.num_edges} edges exceeds the enumeration bound {max_edges}"
        )
    n = g.num_verts
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for e in g.edges:
        nbrs[e.src].append(e.trg)
        nbrs[e.trg].append(e.src)
    nbrs = [sorted(set(ns)) for ns in nbrs]
    has_loop = any(e.src == e.trg for e in g.edges)
    best = 0

    def rec(v: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if v == n:
            return
        free_later = sum(1 for u in range(v, n) if not used >> u & 1)
        # A future matched edge consumes two free vertices (one if a loop).
        cap = free_later if has_loop else free_later // 2
        if size + cap <= best:
            return
        if used >> v & 1:
            rec(v + 1, used, size)
            return
        rec(v + 1, used | (1 << v), size)
        for u in nbrs[v]:
            if u == v:
                rec(v + 1, used | (1 << v), size + 1)
            elif not used >> u & 1:
                rec(v + 1, used | (1 << v) | (1 << u), size + 1)

    rec(0, 0, 0)
    return best


def enumerate_graphs(
    num_verts: int,
    *,
    directed: bool = False,
    self_loops: bool = False,
    max_pairs: int = 16,
) -> Iterator[Graph]:
    """Every graph on ``num_verts`` vertices over the chosen pair universe.

    Undirected universes keep one canonical record per pair (src <= trg).
    Yields all 2**p edge subsets, so the universe size p is guarded.
    """
    pairs = [
        (u, v)
        for u in range(num_verts)
        for v in range(num_verts)
        if (directed or u <= v) and (self_loops or u != v)
    ]
    if len(pairs) > max_pairs:
        raise InstanceTooLargeError(
            f"{len(pairs)} candidate pairs exceeds the enumeration bound {max_pairs}"
        )
    for bits in range(1 << len(pairs)):
        yield Graph(num_verts, [p for i, p in enumerate(pairs) if bits >> i & 1])


def enumerate_matchings(g: Graph, max_edges: int = 20) -> Iterator[tuple[int, ...]]:
    """Every matching of ``g`` as a tuple of edge ids (including the empty one)."""
    if g.num_edges > max_edges:
        raise InstanceTooLargeError(
            f"{g.num_edges} edges exceeds the enumeration bound {max_edges}"
        )
    edges = g.edges

    def rec(i: int, used: frozenset[int], cur: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(edges):
            yield tuple(cur)
            return
        yield from rec(i + 1, used, cur)
        e = edges[i]
        if e.src not in used and e.trg not in used:
            cur.append(i)
            yield from rec(i + 1, used | {e.src, e.trg}, cur)
            cur.pop()

    yield from rec(0, frozenset(), [])


def find_matching_witness_exhaustive(g: Graph, max_verts: int = 7) -> MatchingWitness:
    """A solver-independent accepted witness, found by pure enumeration.

    Takes a maximum matching from :func:`enumerate_matchings` and searches
    all label vectors with labels below ``g.num_verts`` for a cover whose
    bound equals the matching size. Exponential in every direction; for
    checker tests on tiny graphs only.
    """
    from itertools import product

    from .matching import check_osc, weight

    n = g.num_verts
    if n > max_verts:
        raise InstanceTooLargeError(f"{n} vertices exceeds the search bound {max_verts}")
    best: tuple[int, ...] = max(
        enumerate_matchings(g, max_edges=max(g.num_edges, 20)), key=len
    )
    m = Graph(n, [g.edges[i] for i in best])
    for labels in product(range(max(n, 1)), repeat=n):
        if max(labels, default=0) < n or n == 0:
            if check_osc(g, labels) and weight(g, labels) == len(best):
                return MatchingWitness(m, best, labels)
    raise RuntimeError("no certifying cover found; this contradicts matching duality")


def label_count(labels: Sequence[int], c: int, i: int) -> int:
    """How many of the first ``i`` labels equal ``c`` (recursive definition)."""
    if i <= 0:
        return 0
    return label_count(labels, c, i - 1) + (1 if labels[i - 1] == c else 0)


def rec_weight(labels: Sequence[int], n: int, i: int) -> int:
    """Sum of floor(n_c / 2) for labels 2 .. i over the first n labels."""
    if i < 2:
        return 0
    return rec_weight(labels, n, i - 1) + label_count(labels, i, n) // 2


def full_weight(labels: Sequence[int], n: int, i: int) -> int:
    """n_1 + sum of floor(n_c / 2) for c = 2 .. i, by the recursive definitions."""
    return label_count(labels, 1, n) + rec_weight(labels, n, i)


def eval_witness_predicate(problem: str, triple) -> bool:
    """Evaluate a witness predicate directly from its quantified definition.

    ``problem`` is one of ``"connected"``, ``"sp"``, ``"matching"``,
    ``"gcd"``. This is the checkers' test oracle: same precondition errors,
    same shape rules, but the body is a single boolean expression per
    conjunct instead of a diagnostic loop.
    """
    if problem == "connected":
        return _eval_connected(triple)
    if problem == "sp":
        return _eval_sp(triple)
    if problem == "matching":
        return _eval_matching(triple)
    if problem == "gcd":
        return _eval_gcd(triple)
    raise ValueError(f"unknown problem id {problem!r}")


def _eval_connected(t: ConnectivityTriple) -> bool:
    g = t.graph
    if not wellformed(g):
        raise PreconditionError("wellformed", "edge endpoint out of range")
    n, m = g.num_verts, g.num_edges
    w = t.witness
    if isinstance(w, SpanningTreeWitness):
        if len(w.parent_edge) != n or len(w.num) != n:
            return False
        pe, num = w.parent_edge, w.num
        return (
            0 <= w.root < n
            and num[w.root] == 0
            and pe[w.root] is None
            and all(
                v == w.root
                or (
                    pe[v] is not None
                    and 0 <= pe[v] < m
                    and (
                        (g.edges[pe[v]].trg == v and num[v] == num[g.edges[pe[v]].src] + 1)
                        or (g.edges[pe[v]].src == v and num[v] == num[g.edges[pe[v]].trg] + 1)
                    )
                )
                for v in range(n)
            )
        )
    assert isinstance(w, CutWitness)
    s = w.cut_set
    return (
        len(s) > 0
        and all(0 <= v < n for v in s)
        and len(s) < n
        and all((e.src in s) == (e.trg in s) for e in g.edges)
    )


def _eval_sp(t: SpTriple) -> bool:
    g, w = t.graph, t.witness
    if not wellformed(g):
        raise PreconditionError("wellformed", "edge endpoint out of range")
    if not 0 <= w.source < g.num_verts:
        raise PreconditionError("source", f"source {w.source} is not a vertex")
    n, m = g.num_verts, g.num_edges
    if len(w.dist) != n or len(w.num) != n or len(w.parent_edge) != n or len(w.cost) != m:
        return False
    dist, num, pe, cost = w.dist, w.num, w.parent_edge, w.cost
    return (
        dist[w.source] == ExtNat(0)
        and all(dist[v].is_infinite == num[v].is_infinite for v in range(n))
        and all(dist[e.trg] <= dist[e.src] + cost[i] for i, e in enumerate(g.edges))
        and all(
            v == w.source
            or num[v].is_infinite
            or (
                pe[v] is not None
                and 0 <= pe[v] < m
                and g.edges[pe[v]].trg == v
                and dist[v] == dist[g.edges[pe[v]].src] + cost[pe[v]]
                and num[v] == num[g.edges[pe[v]].src] + 1
            )
            for v in range(n)
        )
    )


def _eval_matching(t: MatchingTriple) -> bool:
    g, w = t.graph, t.witness
    m, f, osc = w.matching, w.edge_map, w.osc
    require_matching_inputs(g, m)
    n = g.num_verts
    if len(f) != m.num_edges or len(osc) != n:
        return False
    edges = m.edges
    return (
        all(
            0 <= f[i] < g.num_edges
            and {e.src, e.trg} == {g.edges[f[i]].src, g.edges[f[i]].trg}
            for i, e in enumerate(edges)
        )
        and all(
            not ({edges[i].src, edges[i].trg} & {edges[j].src, edges[j].trg})
            for i in range(len(edges))
            for j in range(i + 1, len(edges))
        )
        and all(0 <= osc[v] < n for v in range(n))
        and all(
            osc[e.src] == 1 or osc[e.trg] == 1 or (osc[e.src] == osc[e.trg] >= 2)
            for e in g.edges
        )
        and m.num_edges == full_weight(osc, n, max(osc, default=0))
    )


def _eval_gcd(t: GcdTriple) -> bool:
    if t.a < 0 or t.b < 0:
        raise PreconditionError("nonneg_inputs", "a and b must be nonnegative")
    if t.a + t.b == 0:
        raise PreconditionError("not_both_zero", "gcd(0, 0) is undefined")
    return (
        t.g >= 0
        and (t.a == 0 if t.g == 0 else t.a % t.g == 0)
        and (t.b == 0 if t.g == 0 else t.b % t.g == 0)
        and t.g == t.s * t.a + t.t * t.b
    )
