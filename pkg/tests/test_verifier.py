import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_connected
from totalproper.coloring import TotalColoring, is_total_proper_path, uniform_coloring
from totalproper.constructors import color_cycle
from totalproper.graph import Graph, GraphError, complete_bipartite_graph, complete_graph, cycle_graph, path_graph
from totalproper.verifier import (VerificationError, WalkBatch, check_strong_certificate, count_failing_pairs,
                                  exists_total_proper_path, has_crossing_proper_arcs, has_strong_property,
                                  is_total_proper_connected)


def k23_coloring():
    g = complete_bipartite_graph(2, 3)
    vc = (1, 2, 3, 3, 3)
    ec = {(0, 2): 2, (0, 3): 3, (0, 4): 1, (1, 2): 1, (1, 3): 2, (1, 4): 3}
    return g, TotalColoring(g, vc, ec)


def all_colorings(g, k):
    for cols in itertools.product(range(1, k + 1), repeat=g.n + g.m):
        yield TotalColoring(g, cols[:g.n], dict(zip(g.edge_list, cols[g.n:])))


def test_witnesses_are_proper_paths():
    g = cycle_graph(6)
    c = color_cycle(6)
    report = is_total_proper_connected(g, c)
    assert report.connected and report.pairs_checked == 15
    for (u, v), p in report.witnesses.items():
        assert p[0] == u and p[-1] == v and is_total_proper_path(g, c, p)


def test_monochromatic_c4_fails():
    g = cycle_graph(4)
    report = is_total_proper_connected(g, uniform_coloring(g))
    assert not report.connected and report.failing_pair is not None
    assert count_failing_pairs(g, uniform_coloring(g)) == 2


def test_complete_graph_one_color():
    g = complete_graph(4)
    assert is_total_proper_connected(g, uniform_coloring(g)).connected


def test_modes_on_p4():
    g = path_graph(4)
    c = TotalColoring(g, (1, 1, 2, 1), {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    assert is_total_proper_connected(g, c, "pvc").connected
    assert is_total_proper_connected(g, c, "pc").connected
    assert not is_total_proper_connected(g, c, "tpc").connected


def test_errors():
    g = path_graph(3)
    with pytest.raises(VerificationError):
        exists_total_proper_path(g, uniform_coloring(g), 1, 1)
    with pytest.raises(ValueError):
        is_total_proper_connected(g, uniform_coloring(g), "bogus")
    split = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        is_total_proper_connected(split, uniform_coloring(split))


def random_instance(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    tree = [(rng.randrange(v), v) for v in range(1, n)]
    extra = rng.sample([p for p in pairs if p not in tree], rng.randint(0, len(pairs) - len(tree)))
    g = Graph.from_edges(n, tree + extra)
    k = rng.randint(1, 4)
    return g, TotalColoring(g, tuple(rng.randint(1, k) for _ in range(n)), {e: rng.randint(1, k) for e in g.edge_list})


@settings(max_examples=150)
@given(st.integers(0, 10**9))
def test_mode_monotonicity(seed):
    g, c = random_instance(seed)
    if is_total_proper_connected(g, c, "tpc").connected:
        assert is_total_proper_connected(g, c, "pc").connected
        assert is_total_proper_connected(g, c, "pvc").connected


@settings(max_examples=150)
@given(st.integers(0, 10**9), st.sampled_from(["tpc", "pc", "pvc"]))
def test_matches_brute_force(seed, mode):
    g, c = random_instance(seed)
    expected = brute_connected(g.n, g.edge_list, c.vertex_colors, c.edge_colors, mode)
    assert is_total_proper_connected(g, c, mode).connected == expected


@settings(max_examples=60)
@given(st.integers(0, 10**9))
def test_walk_batch_is_a_sound_prefilter(seed):
    g, c = random_instance(seed)
    import numpy as np
    row = np.array([list(c.vertex_colors) + [c.edge_colors[e] for e in g.edge_list]])
    walks_ok = all(WalkBatch(g).reachable(row, s).all() for s in range(g.n))
    if is_total_proper_connected(g, c).connected:
        assert walks_ok


def test_strong_property_examples():
    c5 = color_cycle(5)
    report = has_strong_property(c5.graph, c5)
    assert report.holds
    for (u, v), (p1, p2) in report.certificates.items():
        assert check_strong_certificate(c5, u, v, p1, p2)
    k3 = complete_graph(3)
    assert not has_strong_property(k3, uniform_coloring(k3))


def test_no_three_coloring_of_c4_is_strong():
    g = cycle_graph(4)
    assert not any(has_strong_property(g, c) for c in all_colorings(g, 3))


def test_k23_witness():
    g, c = k23_coloring()
    assert is_total_proper_connected(g, c).connected


def test_certificate_checker_rejects_bad_pairs():
    c = color_cycle(5)
    assert not check_strong_certificate(c, 0, 2, (0, 1, 2), (0, 1, 2))
    assert not check_strong_certificate(c, 0, 2, (0, 1, 2), (1, 2))


def random_cycle_coloring(n, rng):
    g = cycle_graph(n)
    return TotalColoring(g, tuple(rng.randint(1, 3) for _ in range(n)), {e: rng.randint(1, 3) for e in g.edge_list})


@pytest.mark.parametrize("n", [4, 5, 7, 8])
def test_crossing_arcs_need_length_divisible_by_three(n):
    rng = random.Random(n)
    for _ in range(3000):
        assert not has_crossing_proper_arcs(random_cycle_coloring(n, rng))


def periodic_cycle_coloring(n):
    """Edges cycle 1, 2, 3 around C_n; each vertex takes the color missing at it."""
    g = cycle_graph(n)
    edge = {}
    for i in range(n):
        a, b = i, (i + 1) % n
        edge[(min(a, b), max(a, b))] = i % 3 + 1
    at = [[c for e, c in edge.items() if x in e] for x in range(n)]
    return TotalColoring(g, tuple(6 - sum(cs) for cs in at), edge)


@pytest.mark.parametrize("n", [6, 9, 12])
def test_crossing_arcs_exist_when_divisible_by_three(n):
    assert has_crossing_proper_arcs(periodic_cycle_coloring(n))
