"""Two-round threshold heuristic for node-disjoint pairs (MBA baseline).

Finds one high-bandwidth path, deletes its interior nodes, then searches
again. The two-step approach is exactly what makes it a baseline: the
first path can consume nodes a valid pair needs, so it misses pairs a
concurrent search finds.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, PathPair, bottleneck

Link = tuple[int, int, int]


@dataclass(frozen=True)
class EdgePools:
    """Links split by incidence to the source, sorted by descending bandwidth."""

    es: tuple[Link, ...]
    bs: tuple[Link, ...]


def _split_pools(links: list[Link], s: int) -> EdgePools:
    es: list[Link] = []
    bs: list[Link] = []
    for u, v, bw in links:
        (es if s in (u, v) else bs).append((u, v, bw))
    es.sort(key=lambda l: (-l[2], l[0], l[1]))
    bs.sort(key=lambda l: (-l[2], l[0], l[1]))
    return EdgePools(tuple(es), tuple(bs))


def build_edge_pools(g: Graph, s: int) -> EdgePools:
    return _split_pools(g.links(), s)


def _cheapest_path(links: list[Link], tau: int, s: int, t: int) -> tuple[int, ...] | None:
    """Min-cost Dijkstra on the links with bandwidth >= tau.

    Cost per link is C - bandwidth with C one above the largest kept
    bandwidth, so high-bandwidth links are preferred. Ties go to fewer
    hops, then lowest node id.
    """
    kept = [(u, v, bw) for u, v, bw in links if bw >= tau]
    if not kept:
        return None
    c = 1 + max(bw for _, _, bw in kept)
    adj: dict[int, list[tuple[int, int]]] = {}
    for u, v, bw in kept:
        adj.setdefault(u, []).append((v, c - bw))
        adj.setdefault(v, []).append((u, c - bw))
    for lst in adj.values():
        lst.sort()
    dist: dict[int, tuple[int, int]] = {s: (0, 0)}
    pred: dict[int, int] = {}
    done: set[int] = set()
    heap: list[tuple[int, int, int]] = [(0, 0, s)]
    while heap:
        cost, hops, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == t:
            break
        for v, w in adj.get(x, ()):
            if v in done:
                continue
            cand = (cost + w, hops + 1)
            if v not in dist or cand < dist[v]:
                dist[v] = cand
                pred[v] = x
                heapq.heappush(heap, (cand[0], cand[1], v))
    if t not in done:
        return None
    path = [t]
    while path[-1] != s:
        path.append(pred[path[-1]])
    path.reverse()
    return tuple(path)


def _round_path(links: list[Link], s: int, t: int) -> tuple[int, ...] | None:
    """One round of the threshold sweep.

    Source-incident bandwidth values are tried first, descending; only
    when none of them admits a path do the remaining values get a turn.
    """
    pools = _split_pools(links, s)
    for pool in (pools.es, pools.bs):
        for tau in sorted({bw for _, _, bw in pool}, reverse=True):
            p = _cheapest_path(links, tau, s, t)
            if p is not None:
                return p
    return None


def mba_pair(g: Graph, s: int, t: int) -> PathPair | None:
    """Node-disjoint s-t pair by two rounds of threshold search, or None.

    Round one finds a path; its links, its interior nodes (never s or
    t), and their incident links are removed; round two repeats the
    sweep on what is left. Returns None as soon as either round finds
    nothing.
    """
    if not 0 <= s < g.n or not 0 <= t < g.n:
        raise ValueError("endpoint out of range")
    if s == t:
        raise ValueError("source and destination must differ")
    links = g.links()
    first = _round_path(links, s, t)
    if first is None:
        return None
    removed = set(first[1:-1])
    # dropping the first path's own links matters when it is the direct
    # s-t hop, which leaves no interior node to delete
    used = {frozenset(l) for l in zip(first, first[1:])}
    reduced = [
        (u, v, bw)
        for u, v, bw in links
        if u not in removed and v not in removed and frozenset((u, v)) not in used
    ]
    second = _round_path(reduced, s, t)
    if second is None:
        return None
    return PathPair(first, second, bottleneck(g, first), bottleneck(g, second))
