import itertools

import pytest

from totalproper.families import random_connected
from totalproper.graph import GraphError, complete_bipartite_graph, complete_graph, cycle_graph, petersen_graph, star_graph
from totalproper.spanning import hamiltonian_path, low_degree_tree, spanning_tree


def is_spanning_tree(g, t):
    return t.n == g.n and t.edges <= g.edges and t.is_tree()


@pytest.mark.parametrize("strategy", ["bfs", "min_max_degree_heuristic", "exhaustive_min_delta"])
def test_strategies_give_spanning_trees(strategy):
    for seed in range(20):
        n = 3 + seed % 7
        g = random_connected(n, min(n + seed % 4, n * (n - 1) // 2), seed)
        assert is_spanning_tree(g, spanning_tree(g, strategy))


def test_exhaustive_minimum():
    assert spanning_tree(complete_graph(4), "exhaustive_min_delta").max_degree == 2
    assert spanning_tree(star_graph(4), "exhaustive_min_delta").max_degree == 4
    assert spanning_tree(cycle_graph(6), "exhaustive_min_delta").max_degree == 2


def test_exhaustive_matches_brute_force():
    for seed in range(10):
        g = random_connected(6, 8, seed)
        best = min(
            max(sum(1 for e in es if v in e) for v in range(g.n))
            for es in itertools.combinations(g.edge_list, g.n - 1)
            if spanning_tree_edges_ok(g.n, es))
        assert spanning_tree(g, "exhaustive_min_delta").max_degree == best


def spanning_tree_edges_ok(n, es):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in es:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def test_heuristic_never_worse_than_bfs():
    for seed in range(20):
        g = random_connected(12, 24, seed)
        assert low_degree_tree(g).max_degree <= spanning_tree(g).max_degree


def test_errors():
    with pytest.raises(GraphError):
        spanning_tree(complete_graph(3), "nope")
    with pytest.raises(GraphError):
        spanning_tree(complete_graph(11), "exhaustive_min_delta")


def test_hamiltonian_path():
    p = petersen_graph()
    path = hamiltonian_path(p)
    assert sorted(path) == list(range(10))
    assert all(p.has_edge(a, b) for a, b in zip(path, path[1:]))
    assert hamiltonian_path(complete_bipartite_graph(1, 3)) is None
    assert hamiltonian_path(complete_bipartite_graph(2, 4)) is None
    assert hamiltonian_path(complete_bipartite_graph(3, 4)) is not None
