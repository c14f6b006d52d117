"""Single-source maximum-bottleneck-bandwidth tree.

Dijkstra variant: instead of minimizing summed cost, each node keeps the
best achievable path bottleneck from the source, and relaxation replaces
it whenever min(maxbw[x], bw(x, v)) improves on it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph


@dataclass
class WidestTree:
    """Widest-path search result for one source.

    maxbw[v] is the best achievable bottleneck bandwidth from the source
    to v; 0 means unreachable (the source itself also stores 0 and is
    treated as unbounded during relaxation). previous[v] is the
    predecessor on a widest path, None at the source. settled lists
    nodes in the order they became permanent, source first.
    """

    source: int
    maxbw: list[int]
    previous: list[int | None]
    permanent: list[bool]
    settled: list[int]


def max_bandwidth_tree(g: Graph, s: int) -> WidestTree:
    """Compute per-node maximum bottleneck bandwidth from s.

    Extraction always picks the tentative node with the largest maxbw,
    ties going to the lowest node id, so results are deterministic.
    """
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range 0..{g.n - 1}")
    adj = g.adjacency()
    maxbw = [0] * g.n
    previous: list[int | None] = [s] * g.n
    previous[s] = None
    permanent = [False] * g.n
    permanent[s] = True
    settled = [s]
    heap: list[tuple[int, int]] = []
    for v, bw in adj[s]:
        maxbw[v] = bw
        heap.append((-bw, v))
    heapq.heapify(heap)
    while heap:
        neg, x = heapq.heappop(heap)
        if permanent[x] or -neg != maxbw[x]:
            continue
        permanent[x] = True
        settled.append(x)
        bx = maxbw[x]
        for v, bw in adj[x]:
            if permanent[v]:
                continue
            w = bx if bw >= bx else bw
            if w > maxbw[v]:
                maxbw[v] = w
                previous[v] = x
                heapq.heappush(heap, (-w, v))
    return WidestTree(s, maxbw, previous, permanent, settled)


def extract_widest_path(tree: WidestTree, dest: int) -> tuple[int, ...] | None:
    """Predecessor walk from dest back to the source.

    Returns None when dest is unreachable. Raises ValueError when dest is
    the source itself (there is no path to extract).
    """
    if not 0 <= dest < len(tree.maxbw):
        raise ValueError(f"destination {dest} out of range")
    if dest == tree.source:
        raise ValueError("destination equals source")
    if tree.maxbw[dest] == 0:
        return None
    path = [dest]
    v: int | None = dest
    while v != tree.source:
        v = tree.previous[v]
        assert v is not None
        path.append(v)
    path.reverse()
    return tuple(path)
