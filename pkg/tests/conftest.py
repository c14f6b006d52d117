"""Shared fixtures and independent reference oracles.

The reference helpers here are deliberately naive (plain recursion over
sorted adjacency) so they stay independent of the library's own search
code.
"""

from __future__ import annotations

import pytest

from widestpair.graph import Graph, SplitMix64, assign_random_bandwidths, generate_random_graph
from widestpair.sample import five_node_network

TRAP_LINKS = [(0, 2, 11), (2, 1, 11), (1, 3, 11), (0, 1, 10), (2, 3, 1)]


def make_graph(n, links):
    g = Graph(n)
    for u, v, bw in links:
        g.add_link(u, v, bw)
    return g


@pytest.fixture
def five_node() -> Graph:
    return five_node_network()


@pytest.fixture
def trap() -> Graph:
    # widest s-t path eats both intermediate nodes, so a two-step
    # heuristic finds no second path while the pair (s-a-t, s-b-t) exists
    return make_graph(4, TRAP_LINKS)


@pytest.fixture
def triangle() -> Graph:
    return make_graph(3, [(0, 1, 5), (0, 2, 3), (1, 2, 4)])


@pytest.fixture
def path4() -> Graph:
    # a tree: every internal node is a cut vertex, no disjoint pairs
    return make_graph(4, [(0, 1, 5), (1, 2, 6), (2, 3, 7)])


def ref_simple_paths(g: Graph, s: int, t: int) -> list[tuple[int, ...]]:
    """Reference enumeration: recursion over sorted neighbors."""
    out: list[tuple[int, ...]] = []

    def walk(path, used):
        for v in g.neighbors(path[-1]):
            if v == t:
                out.append(tuple(path) + (t,))
            elif v not in used:
                path.append(v)
                used.add(v)
                walk(path, used)
                used.discard(v)
                path.pop()

    walk([s], {s})
    return out


def path_bottleneck(g: Graph, path) -> int:
    return min(g.bandwidth(u, v) for u, v in zip(path, path[1:]))


def widest_by_enum(g: Graph, s: int, t: int) -> int:
    """Max bottleneck over all simple s-t paths, 0 when none exist."""
    return max((path_bottleneck(g, p) for p in ref_simple_paths(g, s, t)), default=0)


def suite_graphs(count: int, seed: int = 999, n_lo: int = 4, n_hi: int = 10, max_bw: int = 50):
    """Seeded stream of random connected capacitated graphs."""
    rng = SplitMix64(seed)
    for k in range(count):
        n = n_lo + k % (n_hi - n_lo + 1)
        m_hi = min(2 * n, n * (n - 1) // 2)
        m_lo = min(n, m_hi)
        m = m_lo + rng.below(m_hi - m_lo + 1)
        g = generate_random_graph(n, m, seed=1000 + k)
        yield assign_random_bandwidths(g, max_bw, seed=2000 + k)
