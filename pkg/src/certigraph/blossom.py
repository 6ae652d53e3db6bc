"""Maximum-cardinality matching with an odd-set cover certificate.

The matching itself comes from the classic blossom search: grow alternating
trees from free vertices, contract odd cycles (blossoms) when two even
vertices meet inside a tree, augment when two trees meet. Blossoms are
tracked through a ``base`` array mapping every vertex to the base of its
(possibly nested) contracted cycle.

The certificate is extracted after the matching is maximum, from one final
multi-root search that cannot augment. At that point the vertices split
into three classes:

* ``EVEN``: in some alternating tree at even depth (including every free
  vertex and everything swallowed by a blossom);
* ``ODD``: in a tree at odd depth;
* unreached: matched vertices no tree touched, perfectly matched among
  themselves.

No edge joins two even vertices of different blossoms (the search would
have contracted or augmented) and none joins an even vertex to an
unreached one (the search would have grown). The odd-set cover follows:
label odd vertices 1; give each blossom's vertex set a fresh shared label
>= 2; give each unreached component a fresh shared label >= 2, except
two-vertex components, where labeling one endpoint 1 suffices (and keeps
every label below the vertex count on tiny graphs). Counting matched edges
per class shows the cover's bound equals the matching size, so the checker
accepts; the caller is expected to run the checker, which is the actual
correctness argument for this construction.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph

_UNREACHED, _EVEN, _ODD = 0, 1, 2


def maximum_matching_with_cover(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (sorted G-edge ids forming a maximum matching, cover labels).

    Expects a wellformed graph without self-loops or duplicate ordered
    edges (the matching problem's precondition); the caller validates.
    """
    n = g.num_verts
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in g.edges:
        if e.src != e.trg:
            adj[e.src].append(e.trg)
            adj[e.trg].append(e.src)
    adj = [sorted(set(ns)) for ns in adj]

    match = _maximum_matching(n, adj)
    status, base = _final_forest(n, adj, match)
    labels = _cover_labels(n, adj, match, status, base)
    edge_ids = _matched_edge_ids(g, match)
    return edge_ids, labels


def _maximum_matching(n: int, adj: list[list[int]]) -> list[int]:
    match = [-1] * n
    # Greedy seed: fewer augmentation phases, same maximum.
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _find_augmenting_path(n, adj, match, root)
        if end == -1:
            continue
        # Flip matched/unmatched edges along the found path back to the root.
        v = end
        while v != -1:
            pv = parent[v]
            next_v = match[pv]
            match[v] = pv
            match[pv] = v
            v = next_v
    return match


def _find_augmenting_path(
    n: int, adj: list[list[int]], match: list[int], root: int
) -> tuple[int, list[int]]:
    """Search for a free vertex reachable from ``root`` along an alternating path.

    Returns (endpoint, parent) on success, (-1, parent) if the tree is
    exhausted. ``parent[v]`` is the even vertex from which odd v was
    reached; blossom contraction also threads parent pointers around each
    cycle so augmentation can walk through it.
    """
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # ``to`` is even: the edge closes an odd cycle; contract it.
                cur_base = _lca(match, base, parent, v, to)
                blossom = [False] * n
                _mark_path(match, base, blossom, parent, v, cur_base, to)
                _mark_path(match, base, blossom, parent, to, cur_base, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def _lca(
    match: list[int], base: list[int], parent: list[int], a: int, b: int
) -> int:
    """Base of the lowest common tree ancestor of (the blossoms of) a and b."""
    seen = [False] * len(match)
    x = base[a]
    while True:
        seen[x] = True
        if match[x] == -1:
            break
        x = base[parent[match[x]]]
    y = base[b]
    while not seen[y]:
        y = base[parent[match[y]]]
    return y


def _mark_path(
    match: list[int],
    base: list[int],
    blossom: list[bool],
    parent: list[int],
    v: int,
    b: int,
    child: int,
) -> None:
    """Mark blossom bases from v up to b, threading parent pointers around."""
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _final_forest(
    n: int, adj: list[list[int]], match: list[int]
) -> tuple[list[int], list[int]]:
    """Grow the alternating forest of a maximum matching from all free vertices.

    No augmenting path exists, so every even-even edge closes a blossom
    within one tree; a cross-tree one would contradict maximality.
    """
    status = [_UNREACHED] * n
    parent = [-1] * n
    base = list(range(n))
    root_of = [-1] * n
    queue = deque()
    for v in range(n):
        if match[v] == -1:
            status[v] = _EVEN
            root_of[v] = v
            queue.append(v)
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if status[to] == _EVEN:
                if root_of[to] != root_of[v]:
                    raise RuntimeError("augmenting path found after maximality")
                cur_base = _lca(match, base, parent, v, to)
                blossom = [False] * n
                _mark_path(match, base, blossom, parent, v, cur_base, to)
                _mark_path(match, base, blossom, parent, to, cur_base, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur_base
                        if status[i] != _EVEN:
                            status[i] = _EVEN
                            queue.append(i)
            elif status[to] == _UNREACHED:
                parent[to] = v
                status[to] = _ODD
                root_of[to] = root_of[v]
                mate = match[to]
                status[mate] = _EVEN
                root_of[mate] = root_of[v]
                queue.append(mate)
    return status, base


def _cover_labels(
    n: int,
    adj: list[list[int]],
    match: list[int],
    status: list[int],
    base: list[int],
) -> tuple[int, ...]:
    labels = [0] * n
    for v in range(n):
        if status[v] == _ODD:
            labels[v] = 1
    next_label = 2

    # Each blossom's vertices share one fresh label; singleton evens stay 0.
    groups: dict[int, list[int]] = {}
    for v in range(n):
        if status[v] == _EVEN:
            groups.setdefault(base[v], []).append(v)
    for b in sorted(groups):
        members = groups[b]
        if len(members) > 1:
            for v in members:
                labels[v] = next_label
            next_label += 1

    # Unreached components are perfectly matched inside themselves.
    seen = [False] * n
    for start in range(n):
        if status[start] != _UNREACHED or seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if status[u] == _UNREACHED and not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        if len(comp) == 2:
            labels[min(comp)] = 1
        else:
            for v in comp:
                labels[v] = next_label
            next_label += 1
    return tuple(labels)


def _matched_edge_ids(g: Graph, match: list[int]) -> tuple[int, ...]:
    """Lowest G-edge id joining each matched pair, ascending."""
    by_pair: dict[frozenset[int], int] = {}
    for i, e in enumerate(g.edges):
        key = frozenset((e.src, e.trg))
        by_pair.setdefault(key, i)
    ids = [
        by_pair[frozenset((v, match[v]))]
        for v in range(g.num_verts)
        if match[v] > v
    ]
    return tuple(sorted(ids))
