"""Connected two-way two-step dominating sets.

A set ``D`` qualifies when ``G[D]`` is connected, every pendant vertex is in
``D``, every vertex lies within distance two of ``D``, and every vertex at
distance exactly two has at least two neighbours at distance one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, GraphError
from .structure import distances_from_set, shortest_path


@dataclass(frozen=True)
class DominationLayers:
    d: frozenset[int]
    n1: frozenset[int]
    n2: frozenset[int]
    far: frozenset[int]  # distance >= 3


def layers(g: Graph, d) -> DominationLayers:
    dist = distances_from_set(g, d)
    by = {0: set(), 1: set(), 2: set(), 3: set()}
    for v, x in enumerate(dist):
        by[min(x, 3) if x != math.inf else 3].add(v)
    return DominationLayers(frozenset(by[0]), frozenset(by[1]), frozenset(by[2]), frozenset(by[3]))


def induces_connected(g: Graph, d) -> bool:
    d = set(d)
    if not d:
        return False
    start = min(d)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in d and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == d


def contains_pendants(g: Graph, d) -> bool:
    return all(v in d for v in range(g.n) if g.degree(v) == 1)


def two_step_dominates(g: Graph, d) -> bool:
    return not layers(g, d).far


def two_way(g: Graph, d) -> bool:
    lay = layers(g, d)
    return all(sum(1 for x in g.adj[y] if x in lay.n1) >= 2 for y in lay.n2)


def is_connected_two_way_two_step(g: Graph, d) -> bool:
    return (induces_connected(g, d) and contains_pendants(g, d)
            and two_step_dominates(g, d) and two_way(g, d))


def _bad_vertices(g: Graph, d) -> set[int]:
    lay = layers(g, d)
    bad = set(lay.far)
    for y in lay.n2:
        if sum(1 for x in g.adj[y] if x in lay.n1) < 2:
            bad.add(y)
    return bad


def _connect(g: Graph, d: set[int]) -> set[int]:
    """Join the components of ``G[d]`` by shortest paths, smallest component first."""
    d = set(d)
    while True:
        comp = _component(g, d, min(d))
        if comp == d:
            return d
        path = shortest_path(g, comp, d - comp)
        d.update(path)


def _component(g: Graph, d: set[int], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in d and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def two_way_two_step_dominating_set(g: Graph) -> frozenset[int]:
    """Greedy grow-and-prune construction; the result always satisfies the definition
    but carries no size guarantee."""
    if g.n < 4:
        raise GraphError("needs n >= 4")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    pendants = {v for v in range(g.n) if g.degree(v) == 1}
    if pendants:
        d = _connect(g, pendants)
    else:
        top = max(range(g.n), key=lambda v: (g.degree(v), -v))
        d = {top}
    bad = _bad_vertices(g, d)
    while bad:
        best = None
        for w in range(g.n):
            if w in d:
                continue
            cand = _connect(g, d | {w})
            remaining = len(_bad_vertices(g, cand))
            key = ((len(bad) - remaining) / (len(cand) - len(d)), -w)
            if best is None or key > best[0]:
                best = (key, cand)
        d = best[1]
        bad = _bad_vertices(g, d)
    # prune redundant vertices, low degree first
    for v in sorted(d, key=lambda x: (g.degree(x), x)):
        if v in pendants or len(d) == 1:
            continue
        trial = d - {v}
        if is_connected_two_way_two_step(g, trial):
            d = trial
    return frozenset(d)


def size_bound(g: Graph) -> float:
    """The ``3n/(delta+1) - 2`` size target, reported alongside constructed sets."""
    return 3 * g.n / (g.min_degree + 1) - 2
