"""Maximum-bandwidth node-disjoint path pairs (MLBDP).

The search runs a widest-path Dijkstra over an implicit virtual graph of
n x n virtual nodes (vnodes). A vnode (i, j) holds the frontiers of two
partial paths growing from the source: the first-coordinate path, whose
bottleneck the search maximizes, and the second-coordinate path, whose
bottleneck must never drop below a given limit. Reaching a vnode (d, d)
means destination d was reached by two internally node-disjoint paths.

One run answers "best first-path bottleneck subject to a partner path of
bandwidth >= limit" for every destination at once. Sweeping the limit
over every distinct link bandwidth and keeping the best combined result
per destination yields the maximum combined bandwidth over all
internally node-disjoint pairs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, PathPair


@dataclass(frozen=True)
class VNodeState:
    """Snapshot of one virtual node (i, j) after a run."""

    r_maxbw: int
    b_maxbw: int
    previous: tuple[int, int] | None
    visited: frozenset[int]
    permanent: bool


class VNodeTable:
    """Flat state table for one limit run over the n x n virtual nodes.

    Vnode (i, j) lives at flat index i * n + j. visited masks are node
    bitmasks covering the source and every node on both partial paths,
    frontiers included. settled records flat indexes in the order vnodes
    became permanent through the search loop (pre-labeled source row and
    column excluded).
    """

    __slots__ = ("n", "source", "limit", "r", "b", "prev", "visited", "permanent", "settled")

    def __init__(self, n: int, source: int, limit: int):
        size = n * n
        self.n = n
        self.source = source
        self.limit = limit
        self.r = [0] * size
        self.b = [0] * size
        self.prev = [-1] * size
        self.visited = [0] * size
        self.permanent = bytearray(size)
        self.settled: list[int] = []

    def state(self, i: int, j: int) -> VNodeState:
        idx = i * self.n + j
        prev = self.prev[idx]
        mask = self.visited[idx]
        return VNodeState(
            r_maxbw=self.r[idx],
            b_maxbw=self.b[idx],
            previous=None if prev < 0 else divmod(prev, self.n),
            visited=frozenset(v for v in range(self.n) if mask >> v & 1),
            permanent=bool(self.permanent[idx]),
        )


@dataclass(frozen=True)
class DisjointResult:
    """Best pair found for one destination by one or more limit runs."""

    dest: int
    pair: PathPair
    combined: int
    limit_used: int


def unique_bandwidths(g: Graph) -> list[int]:
    """Distinct link bandwidths, ascending."""
    return sorted({bw for _, _, bw in g.links()})


def _initialize(table: VNodeTable, adj: list[list[tuple[int, int]]]) -> list[tuple[int, int, int]]:
    """Seed the table and return the heap entries.

    The source row and column become permanent; every ordered pair
    (i, j) of distinct source neighbors with bandwidth(s, j) >= limit
    starts with the two first-hop bandwidths and visited {s, i, j}.
    """
    n, s, limit = table.n, table.source, table.limit
    r, b, prev, vis, perm = table.r, table.b, table.prev, table.visited, table.permanent
    for i in range(n):
        perm[i * n + s] = 1
        perm[s * n + i] = 1
    src_idx = s * n + s
    base_mask = 1 << s
    heap: list[tuple[int, int, int]] = []
    for i, bw_i in adj[s]:
        for j, bw_j in adj[s]:
            if i != j and bw_j >= limit:
                idx = i * n + j
                r[idx] = bw_i
                b[idx] = bw_j
                prev[idx] = src_idx
                vis[idx] = base_mask | 1 << i | 1 << j
                heap.append((-bw_i, -bw_j, idx))
    heapq.heapify(heap)
    return heap


def run_limit_search(g: Graph, s: int, limit: int) -> VNodeTable:
    """One widest-pair search with a fixed partner-bandwidth limit.

    Initialization seeds every ordered pair (i, j) of distinct neighbors
    of s whose second link carries at least the limit. The source row and
    column vnodes (i, s) / (s, i) are pre-labeled permanent so neither
    path can fold back through the source. The loop extracts the
    tentative vnode with the largest first-path bottleneck (ties: larger
    partner bottleneck, then lowest (i, j)), records destinations when
    both coordinates agree, and otherwise relaxes both coordinates'
    neighbors under the visited-set disjointness check; second-coordinate
    moves must also keep the partner bottleneck at or above the limit.

    A move onto the opposite frontier is the one exception to the
    visited-set check: it closes the pair at that node, producing the
    destination vnode (d, d).
    """
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range 0..{g.n - 1}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    n = g.n
    adj = g.adjacency()
    table = VNodeTable(n, s, limit)
    heap = _initialize(table, adj)
    r, b, prev, vis = table.r, table.b, table.prev, table.visited
    perm = table.permanent
    settled = table.settled
    push = heapq.heappush
    pop = heapq.heappop
    remaining = n - 1
    while heap:
        neg_r, neg_b, idx = pop(heap)
        if perm[idx]:
            continue
        rxy = -neg_r
        bxy = -neg_b
        if r[idx] != rxy or b[idx] != bxy:
            continue
        perm[idx] = 1
        settled.append(idx)
        x, y = divmod(idx, n)
        if x == y:
            # destination reached; never relaxed from
            remaining -= 1
            if remaining == 0:
                break
            continue
        vxy = vis[idx]
        for v, bw in adj[x]:
            tgt = v * n + y
            if perm[tgt] or (vxy >> v & 1 and v != y):
                continue
            nr = rxy if bw >= rxy else bw
            tr = r[tgt]
            if nr > tr or (nr == tr and bxy > b[tgt]):
                r[tgt] = nr
                b[tgt] = bxy
                prev[tgt] = idx
                vis[tgt] = vxy | 1 << v
                push(heap, (-nr, -bxy, tgt))
        for u, bw in adj[y]:
            tgt = x * n + u
            if perm[tgt] or (vxy >> u & 1 and u != x):
                continue
            nb = bxy if bw >= bxy else bw
            if nb < limit:
                continue
            tr = r[tgt]
            if rxy > tr or (rxy == tr and nb > b[tgt]):
                r[tgt] = rxy
                b[tgt] = nb
                prev[tgt] = idx
                vis[tgt] = vxy | 1 << u
                push(heap, (-rxy, -nb, tgt))
    return table


def reconstruct_pair(table: VNodeTable, s: int, d: int) -> PathPair:
    """Rebuild the two paths from the predecessor chain of vnode (d, d).

    Walking from (d, d) back to (s, s), each hop changes one coordinate
    (the first hop out of (s, s) changes both); collecting the distinct
    consecutive values per coordinate gives the two node sequences.
    """
    n = table.n
    idx = d * n + d
    if not table.permanent[idx] or table.prev[idx] < 0:
        raise ValueError(f"destination {d} was not reached by a disjoint pair")
    chain = []
    cur = idx
    src_idx = s * n + s
    while cur != src_idx:
        chain.append(cur)
        cur = table.prev[cur]
    chain.append(src_idx)
    chain.reverse()
    red: list[int] = []
    blue: list[int] = []
    for c in chain:
        x, y = divmod(c, n)
        if not red or red[-1] != x:
            red.append(x)
        if not blue or blue[-1] != y:
            blue.append(y)
    return PathPair(tuple(red), tuple(blue), table.r[idx], table.b[idx])


def mlbdp_single(g: Graph, s: int, limit: int) -> dict[int, DisjointResult]:
    """One limit run; a result for every destination it reached.

    Every returned pair has partner bottleneck >= limit.
    """
    table = run_limit_search(g, s, limit)
    n = g.n
    out: dict[int, DisjointResult] = {}
    for d in range(n):
        idx = d * n + d
        if d != s and table.permanent[idx] and table.prev[idx] >= 0:
            pair = reconstruct_pair(table, s, d)
            out[d] = DisjointResult(d, pair, pair.combined, limit)
    return out


def _better(new: DisjointResult, cur: DisjointResult) -> bool:
    # larger combined, then larger min bottleneck; on full ties the
    # earlier (smaller) limit is kept
    a = (new.combined, min(new.pair.red_bw, new.pair.blue_bw))
    c = (cur.combined, min(cur.pair.red_bw, cur.pair.blue_bw))
    return a > c


def mlbdp_full(g: Graph, s: int) -> dict[int, DisjointResult]:
    """Best node-disjoint pair per destination over all bandwidth limits.

    Runs one limit search per distinct link bandwidth, ascending, and
    keeps the per-destination maximum combined bandwidth. A destination
    is present exactly when some run reached it.
    """
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range 0..{g.n - 1}")
    best: dict[int, DisjointResult] = {}
    for limit in unique_bandwidths(g):
        for d, res in mlbdp_single(g, s, limit).items():
            cur = best.get(d)
            if cur is None or _better(res, cur):
                best[d] = res
    return dict(sorted(best.items()))


def virtual_link_count(g: Graph) -> int:
    """Count undirected links of the implicit virtual topology.

    Walks every vnode (i, j) summing its outgoing moves (one per
    neighbor of i plus one per neighbor of j); every virtual link is
    seen from both of its endpoint vnodes.
    """
    adj = g.adjacency()
    n = g.n
    ends = 0
    for i in range(n):
        di = len(adj[i])
        for j in range(n):
            ends += di + len(adj[j])
    assert ends % 2 == 0
    return ends // 2
