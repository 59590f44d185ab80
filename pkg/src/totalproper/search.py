"""Seeded local search for total colorings that pass the verifier.

The objective is the number of vertex pairs without a proper path. A move
recolors one element; half of the moves target an element on a shortest path
between a currently failing pair. Non-worsening moves are accepted (sideways runs are
bounded); when the best count stalls, a random fifth of the elements is recolored.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .coloring import TotalColoring
from .graph import Graph
from .verifier import PathEngine, is_total_proper_connected


@dataclass(frozen=True)
class SearchBudget:
    max_iterations: int = 100_000
    restarts: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.max_iterations < 1 or self.restarts < 1 or self.seed < 0:
            raise ValueError("search budget values must be positive")


def _random_shortest_path(g: Graph, u: int, v: int, rng: random.Random) -> list[int]:
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        nbrs = list(g.adj[x])
        rng.shuffle(nbrs)
        for y in nbrs:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [v]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


class _State:
    """Mutable coloring held directly in a PathEngine's lookup arrays."""

    def __init__(self, g: Graph, c: TotalColoring, mode: str):
        self.eng = PathEngine(g, c, mode)

    def get(self, el):
        if isinstance(el, int):
            return self.eng.vc[el]
        u, v = el
        return self.eng.ec[u][v]

    def set(self, el, color):
        if isinstance(el, int):
            self.eng.vc[el] = color
        else:
            u, v = el
            self.eng.ec[u][v] = self.eng.ec[v][u] = color

    def failing(self):
        return self.eng.failing_pairs()

    def coloring(self, g: Graph) -> TotalColoring:
        ec = self.eng.ec
        return TotalColoring(g, tuple(self.eng.vc), {(u, v): ec[u][v] for u, v in g.edge_list})


def improve_coloring(g: Graph, start: TotalColoring, palette: list[int], mutable: list,
                     iterations: int, rng: random.Random, mode: str = "tpc",
                     plateau: int = 200, stall: int = 1500) -> TotalColoring | None:
    """Local search from ``start`` recoloring only ``mutable`` elements (vertex ints
    or edge tuples) within ``palette``. Returns a verified coloring or None."""
    return _improve(g, start, palette, mutable, iterations, rng, mode, plateau, stall)[0]


KICK_FRACTION = 0.2


def _improve(g, start, palette, mutable, iterations, rng, mode, plateau, stall):
    """Returns ``(coloring or None, iterations used)``. At most ``plateau`` sideways
    moves in a row are accepted; after ``stall`` iterations without a new best, a
    fifth of the mutable elements is recolored at random."""
    if not mutable or len(palette) < 2:
        return (start if is_total_proper_connected(g, start, mode).connected else None), 0
    st = _State(g, start, mode)
    mutable_set = set(mutable)
    failing = st.failing()
    best, since, sideways = len(failing), 0, 0
    for it in range(iterations):
        if not failing:
            out = st.coloring(g)
            if is_total_proper_connected(g, out, mode).connected:
                return out, it
            raise AssertionError("local search objective disagrees with verifier")
        el = None
        if rng.random() < 0.5:
            u, v = rng.choice(failing)
            path = _random_shortest_path(g, u, v, rng)
            near = [x for x in path[1:-1] if x in mutable_set]
            near += [(min(a, b), max(a, b)) for a, b in zip(path, path[1:])
                     if (min(a, b), max(a, b)) in mutable_set]
            if near:
                el = rng.choice(near)
        if el is None:
            el = rng.choice(mutable)
        old = st.get(el)
        st.set(el, rng.choice([c for c in palette if c != old]))
        cand = st.failing()
        if len(cand) < len(failing):
            failing, sideways = cand, 0
        elif len(cand) == len(failing) and sideways < plateau:
            failing = cand
            sideways += 1
        else:
            st.set(el, old)
        if len(failing) < best:
            best, since = len(failing), 0
        else:
            since += 1
        if since >= stall:
            for x in rng.sample(mutable, max(1, int(KICK_FRACTION * len(mutable)))):
                st.set(x, rng.choice(palette))
            failing = st.failing()
            best, since, sideways = len(failing), 0, 0
    return None, iterations


def search_coloring(g: Graph, k: int, budget: SearchBudget = SearchBudget(),
                    mode: str = "tpc") -> TotalColoring | None:
    """A verifier-passing coloring with at most ``k`` colors, or None once the budget
    is spent. None is not a proof that no such coloring exists."""
    if k < 1:
        raise ValueError("k must be positive")
    palette = list(range(1, k + 1))
    elements: list = list(range(g.n)) + list(g.edge_list)
    master = random.Random(budget.seed)
    per_restart = max(1, budget.max_iterations // budget.restarts)
    for _ in range(budget.restarts):
        rng = random.Random(master.randrange(2**32))
        start = TotalColoring(g, tuple(rng.choice(palette) for _ in range(g.n)),
                              {e: rng.choice(palette) for e in g.edge_list})
        if k == 1:
            return start if is_total_proper_connected(g, start, mode).connected else None
        got, _ = _improve(g, start, palette, elements, per_restart, rng, mode, 200, 1500)
        if got is not None:
            return got
    return None
