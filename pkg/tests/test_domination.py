import itertools

import pytest

from totalproper.domination import (is_connected_two_way_two_step, layers, size_bound,
                                    two_way_two_step_dominating_set)
from totalproper.families import random_connected, random_min_degree
from totalproper.graph import GraphError, complete_graph, cycle_graph, path_graph


def brute_minimum(g):
    for size in range(1, g.n + 1):
        for d in itertools.combinations(range(g.n), size):
            if is_connected_two_way_two_step(g, d):
                return size


def test_examples():
    assert two_way_two_step_dominating_set(complete_graph(5)) == {0}
    assert two_way_two_step_dominating_set(path_graph(4)) == {0, 1, 2, 3}
    assert brute_minimum(cycle_graph(6)) == 3
    d = two_way_two_step_dominating_set(cycle_graph(6))
    assert is_connected_two_way_two_step(cycle_graph(6), d) and len(d) == 3


def test_layers():
    lay = layers(path_graph(5), {0})
    assert lay.n1 == {1} and lay.n2 == {2} and lay.far == {3, 4}


def test_predicate_examples():
    c6 = cycle_graph(6)
    assert not is_connected_two_way_two_step(c6, {0, 1})
    assert not is_connected_two_way_two_step(c6, {0, 3})
    assert is_connected_two_way_two_step(c6, {0, 1, 2})


@pytest.mark.parametrize("seed", range(30))
def test_construction_satisfies_definition(seed):
    n = 4 + seed % 8
    g = random_connected(n, min(n - 1 + seed % 6, n * (n - 1) // 2), seed)
    d = two_way_two_step_dominating_set(g)
    assert is_connected_two_way_two_step(g, d)
    if n <= 8:
        assert len(d) >= brute_minimum(g)


def test_min_degree_graph():
    g = random_min_degree(40, 4, 7)
    d = two_way_two_step_dominating_set(g)
    assert is_connected_two_way_two_step(g, d)
    assert size_bound(g) == 3 * 40 / (g.min_degree + 1) - 2


def test_small_rejected():
    with pytest.raises(GraphError):
        two_way_two_step_dominating_set(path_graph(3))
