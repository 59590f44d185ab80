import random

from totalproper.graph import complete_graph, cycle_graph, path_graph
from totalproper.search import SearchBudget, improve_coloring, search_coloring
from totalproper.coloring import uniform_coloring
from totalproper.verifier import is_total_proper_connected

import pytest


def test_finds_cycle_coloring():
    g = cycle_graph(6)
    c = search_coloring(g, 3, SearchBudget(20_000, 4, 1))
    assert c is not None and c.color_count <= 3
    assert is_total_proper_connected(g, c).connected


def test_impossible_budget_returns_none():
    assert search_coloring(path_graph(3), 2, SearchBudget(2_000, 2, 0)) is None


def test_one_color_on_complete_graph():
    assert search_coloring(complete_graph(4), 1) is not None


def test_deterministic():
    g = cycle_graph(7)
    a = search_coloring(g, 3, SearchBudget(20_000, 4, 5))
    b = search_coloring(g, 3, SearchBudget(20_000, 4, 5))
    assert a == b


def test_improve_repairs_single_element():
    g = path_graph(3)
    start = uniform_coloring(g)
    got = improve_coloring(g, start, [1, 2, 3], list(range(g.n)) + g.edge_list, 5_000,
                           random.Random(0))
    assert got is not None and is_total_proper_connected(g, got).connected


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(0, 1, 0)
    with pytest.raises(ValueError):
        search_coloring(path_graph(3), 0)
