import pytest

from widestpair.graph import Graph, bottleneck
from widestpair.widest import extract_widest_path, max_bandwidth_tree

from .conftest import make_graph, suite_graphs, widest_by_enum


def test_five_node_values(five_node):
    # frozen from exhaustive path enumeration on the fixture
    tree = max_bandwidth_tree(five_node, 0)
    assert tree.maxbw[1] == 9
    assert tree.maxbw[2] == 12
    assert tree.maxbw[3] == 12
    assert tree.maxbw[4] == 12


def test_two_node_graph():
    g = make_graph(2, [(0, 1, 5)])
    tree = max_bandwidth_tree(g, 0)
    assert tree.maxbw[1] == 5
    assert extract_widest_path(tree, 1) == (0, 1)


def test_unreachable_node():
    g = Graph(3)
    g.add_link(0, 1, 4)
    tree = max_bandwidth_tree(g, 0)
    assert tree.maxbw[2] == 0
    assert not tree.permanent[2]
    assert extract_widest_path(tree, 2) is None


def test_invalid_source(five_node):
    with pytest.raises(ValueError):
        max_bandwidth_tree(five_node, 9)


def test_matches_enumeration_oracle():
    for g in suite_graphs(40, seed=31, n_lo=2, n_hi=8):
        for s in range(g.n):
            tree = max_bandwidth_tree(g, s)
            for t in range(g.n):
                if t != s:
                    assert tree.maxbw[t] == widest_by_enum(g, s, t)


def test_settlement_order_non_increasing():
    for g in suite_graphs(20, seed=77, n_lo=2, n_hi=8):
        for s in range(g.n):
            tree = max_bandwidth_tree(g, s)
            values = [tree.maxbw[v] for v in tree.settled[1:]]  # source first, stores 0
            assert all(a >= b for a, b in zip(values, values[1:]))


def test_no_tentative_improvement_remains():
    # relaxation postcondition: min(maxbw[u], bw) <= maxbw[v] everywhere
    for g in suite_graphs(20, seed=78, n_lo=2, n_hi=8):
        for s in range(g.n):
            tree = max_bandwidth_tree(g, s)
            for u, v, bw in g.links():
                for a, b in ((u, v), (v, u)):
                    if b == s:
                        continue  # the source needs no incoming improvement
                    reach = bw if a == s else min(tree.maxbw[a], bw)
                    assert reach <= tree.maxbw[b] or not (tree.permanent[a] or a == s)


def test_predecessor_chain_consistent():
    for g in suite_graphs(20, seed=79, n_lo=2, n_hi=8):
        for s in range(g.n):
            tree = max_bandwidth_tree(g, s)
            assert tree.previous[s] is None
            for v in range(g.n):
                if v == s or tree.maxbw[v] == 0:
                    continue
                p = tree.previous[v]
                expect = g.bandwidth(p, v) if p == s else min(tree.maxbw[p], g.bandwidth(p, v))
                assert tree.maxbw[v] == expect


class TestExtract:
    def test_fixture_widest_path(self, five_node):
        tree = max_bandwidth_tree(five_node, 0)
        path = extract_widest_path(tree, 3)
        assert path == (0, 2, 4, 3)
        assert bottleneck(five_node, path) == 12

    def test_bottleneck_always_matches(self):
        for g in suite_graphs(15, seed=80, n_lo=2, n_hi=8):
            for s in range(g.n):
                tree = max_bandwidth_tree(g, s)
                for t in range(g.n):
                    if t == s:
                        continue
                    path = extract_widest_path(tree, t)
                    if path is None:
                        assert tree.maxbw[t] == 0
                    else:
                        assert path[0] == s and path[-1] == t
                        assert len(set(path)) == len(path)
                        assert bottleneck(g, path) == tree.maxbw[t]

    def test_dest_equals_source_rejected(self, five_node):
        tree = max_bandwidth_tree(five_node, 0)
        with pytest.raises(ValueError):
            extract_widest_path(tree, 0)

    def test_adjacent_unique_widest_link(self):
        g = make_graph(3, [(0, 1, 9), (0, 2, 2), (2, 1, 3)])
        tree = max_bandwidth_tree(g, 0)
        assert extract_widest_path(tree, 1) == (0, 1)
