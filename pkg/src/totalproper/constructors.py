"""Coloring constructors. Each returns a TotalColoring that has already passed the
verifier in tpc mode; a constructor never hands back an unverified coloring."""

from __future__ import annotations

import logging
import random
from collections import deque
from typing import Callable, Sequence

from .coloring import TotalColoring
from .domination import layers, two_way_two_step_dominating_set
from .graph import (Edge, Graph, GraphError, complete_bipartite_graph, complete_multipartite_graph,
                    cycle_graph, edge_key)
from .search import improve_coloring
from .spanning import hamiltonian_path, low_degree_tree
from .structure import (block_decomposition, ear_decomposition, is_two_connected,
                        minimally_2connected_spanning, structure_profile)
from .verifier import PathEngine, has_strong_property, is_total_proper_connected, strong_pair

log = logging.getLogger(__name__)


class ConstructionError(RuntimeError):
    pass


def _finish(g: Graph, vc, ec, what: str) -> TotalColoring:
    c = TotalColoring.build(g, vc, ec)
    report = is_total_proper_connected(g, c)
    if not report.connected:
        raise ConstructionError(f"{what}: no total proper path for pair {report.failing_pair}")
    return c


def color_complete(g: Graph) -> TotalColoring:
    if not g.is_complete():
        raise GraphError("color_complete needs a complete graph")
    return _finish(g, [1] * g.n, {e: 1 for e in g.edges}, "complete")


def _tree_colors(t: Graph, root: int, palette: Sequence[int], vc: dict, ec: dict):
    """Lowest-choice coloring of tree ``t`` rooted at ``root``: at every vertex the
    vertex and all incident edges get distinct colors from ``palette``."""
    vc[root] = palette[0]
    queue = deque([(root, None)])
    while queue:
        u, up = queue.popleft()
        used = {vc[u]}
        if up is not None:
            used.add(ec[edge_key(u, up)])
        free = (c for c in palette if c not in used)
        for w in t.adj[u]:
            if w == up:
                continue
            e = edge_key(u, w)
            ec[e] = next(free)
            vc[w] = next(c for c in palette if c not in (vc[u], ec[e]))
            queue.append((w, u))


def color_tree(t: Graph) -> TotalColoring:
    if t.n < 3 or not t.is_tree():
        raise GraphError("color_tree needs a tree with at least 3 vertices")
    delta = t.max_degree
    root = min(range(t.n), key=lambda v: (-t.degree(v), v))
    vc, ec = {}, {}
    _tree_colors(t, root, list(range(1, delta + 2)), vc, ec)
    return _finish(t, vc, ec, "tree")


def _cycle_pattern(length: int) -> tuple[list[int], list[int]]:
    """Vertex and edge colors along a cycle ``v1..vL``; edge ``i`` joins ``v_i`` and
    ``v_{i+1}`` (the last one closes the cycle)."""
    if length < 3:
        raise GraphError("cycle needs length >= 3")
    odd = length % 2
    even_part = length - odd
    verts = [3 if i % 2 == 1 else 4 for i in range(1, even_part + 1)]
    edges = [1 if i % 2 == 1 else 2 for i in range(1, even_part + 1)]
    if odd:
        verts.append(1)
        edges.append(4)
    return verts, edges


def _apply_cycle(order: Sequence[int], vc: dict, ec: dict):
    verts, edges = _cycle_pattern(len(order))
    for i, x in enumerate(order):
        vc[x] = verts[i]
        ec[edge_key(x, order[(i + 1) % len(order)])] = edges[i]


def color_cycle(n: int) -> TotalColoring:
    if n <= 3:
        raise GraphError("color_cycle needs n >= 4; C_3 is complete")
    g = cycle_graph(n)
    vc, ec = {}, {}
    _apply_cycle(list(range(n)), vc, ec)
    return _finish(g, vc, ec, "cycle")


def cycle_order(g: Graph) -> list[int]:
    """Cyclic vertex order of a cycle graph, starting at 0 towards its lower neighbour."""
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in range(g.n)) or not g.is_connected():
        raise GraphError("graph is not a cycle")
    order = [0, g.adj[0][0]]
    while len(order) < g.n:
        a, b = order[-2], order[-1]
        order.append(next(x for x in g.adj[b] if x != a))
    return order


def color_cycle_graph(g: Graph) -> TotalColoring:
    order = cycle_order(g)
    if g.n == 3:
        raise GraphError("C_3 is complete; use color_complete")
    vc, ec = {}, {}
    _apply_cycle(order, vc, ec)
    return _finish(g, vc, ec, "cycle")


# complete bipartite and multipartite

def _bipartite_assign(U: Sequence[int], V: Sequence[int], interleaved: bool):
    """Three colors on the complete bipartite graph between ``U`` and ``V`` with
    ``2 <= |U| <= |V|``."""
    m = len(U)
    vc = {x: 3 for x in (*U, *V)}
    ec = {edge_key(u, v): 3 for u in U for v in V}
    if m == 2:
        u1, u2, v1 = U[0], U[1], V[0]
        vc[u1] = 1
        ec[edge_key(v1, u2)] = 1
        vc[u2] = 2
        ec[edge_key(u1, v1)] = 2
        return vc, ec
    cyc = [U[0], V[0], U[1], V[1], U[2], V[2]]
    if interleaved:
        for i in range(6):
            vc[cyc[i]] = (2 * i) % 3 + 1
            ec[edge_key(cyc[i], cyc[(i + 1) % 6])] = (2 * i + 1) % 3 + 1
    else:
        for i in range(6):
            vc[cyc[i]] = i % 3 + 1
            ec[edge_key(cyc[i], cyc[(i + 1) % 6])] = i % 3 + 1
    for v in V[3:]:
        ec[edge_key(U[2], v)] = 1
    for u in U[3:]:
        ec[edge_key(u, V[0])] = 2
    return vc, ec


def _bipartite_on(g: Graph, U: Sequence[int], V: Sequence[int], what: str) -> TotalColoring:
    if len(U) > len(V):
        U, V = V, U
    if len(U) < 2:
        raise GraphError(f"{what}: both sides need at least 2 vertices")
    errors = []
    for interleaved in (True, False):
        vc, ec = _bipartite_assign(U, V, interleaved)
        for e in g.edges:
            ec.setdefault(e, 3)
        try:
            c = _finish(g, vc, ec, what)
        except ConstructionError as exc:
            log.info("%s: %s reading failed: %s", what,
                     "interleaved" if interleaved else "separate", exc)
            errors.append(str(exc))
            continue
        log.info("%s: %s reading passed", what, "interleaved" if interleaved else "separate")
        return c
    raise ConstructionError(f"{what}: both readings failed: {errors}")


def color_complete_bipartite(m: int, n: int) -> TotalColoring:
    if min(m, n) < 2:
        raise GraphError("color_complete_bipartite needs both sides >= 2")
    g = complete_bipartite_graph(m, n)
    return _bipartite_on(g, list(range(m)), list(range(m, m + n)), "complete bipartite")


def _two_sides(parts: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    side = list(parts[0])
    rest = 1
    if len(side) == 1 and len(parts) > 2:
        side += parts[1]
        rest = 2
    other = [v for p in parts[rest:] for v in p]
    return side, other


def _multipartite_check(sizes: Sequence[int]):
    if len(sizes) < 2 or min(sizes) < 1:
        raise GraphError("need at least two nonempty parts")
    if max(sizes) == 1:
        raise GraphError("graph is complete; use color_complete")


def color_complete_multipartite(parts: Sequence[int]) -> TotalColoring:
    _multipartite_check(parts)
    g = complete_multipartite_graph(list(parts))
    labels, start = [], 0
    for size in parts:
        labels.append(list(range(start, start + size)))
        start += size
    U, V = _two_sides(labels)
    return _bipartite_on(g, U, V, "complete multipartite")


def multipartite_parts(g: Graph) -> list[list[int]]:
    """Parts of a complete multipartite graph (independent sets whose union is
    joined completely), in order of their smallest vertex."""
    part_of = [-1] * g.n
    parts: list[list[int]] = []
    for v in range(g.n):
        if part_of[v] == -1:
            members = [w for w in range(g.n) if w == v or (not g.has_edge(v, w) and part_of[w] == -1)]
            for w in members:
                part_of[w] = len(parts)
            parts.append(members)
    for u, v in ((u, v) for u in range(g.n) for v in range(u + 1, g.n)):
        if g.has_edge(u, v) == (part_of[u] == part_of[v]):
            raise GraphError("graph is not complete multipartite")
    return parts


def color_multipartite_graph(g: Graph) -> TotalColoring:
    parts = multipartite_parts(g)
    _multipartite_check([len(p) for p in parts])
    U, V = _two_sides(parts)
    return _bipartite_on(g, U, V, "complete multipartite")


def color_traceable(g: Graph, h: Sequence[int]) -> TotalColoring:
    h = list(h)
    if sorted(h) != list(range(g.n)) or any(not g.has_edge(a, b) for a, b in zip(h, h[1:])):
        raise GraphError("not a Hamiltonian path of the graph")
    if g.is_complete():
        raise GraphError("graph is complete; use color_complete")
    vc, ec = {}, {e: 3 for e in g.edges}
    # walk the path cycling 1, 2, 3 over vertices and edges alike
    for i, x in enumerate(h):
        vc[x] = (2 * i) % 3 + 1
        if i + 1 < len(h):
            ec[edge_key(x, h[i + 1])] = (2 * i + 1) % 3 + 1
    return _finish(g, vc, ec, "traceable")


def color_hamiltonian(g: Graph) -> TotalColoring:
    h = hamiltonian_path(g)
    if h is None:
        raise GraphError("graph has no Hamiltonian path")
    return color_traceable(g, h)


# 2-connected graphs

EAR_ATTEMPTS = 64
PALETTE4 = (1, 2, 3, 4)


def _ear_candidates(cu: int, cv: int, p: int, first: Sequence[int], last_pref: set[int],
                    rng: random.Random, limit: int):
    """Total proper colorings of an ear ``u u1 .. up v`` as flat lists
    ``[e0, c1, e1, c2, ..., cp, ep]``: deterministic DFS first, then randomised."""
    seen = set()

    def dfs(order_fn):
        seq: list[int] = []

        def rec(i):
            # i indexes ear vertices 1..p; place vertex i then edge i
            if i > p:
                yield tuple(seq)
                return
            prev_e = seq[-1]
            prev_v = cu if i == 1 else seq[-2]
            for cx in order_fn([c for c in PALETTE4 if c != prev_e and c != prev_v
                                and (i < p or c != cv)]):
                seq.append(cx)
                opts = [c for c in PALETTE4 if c != cx and c != prev_e and (i < p or c != cv)]
                if i == p:
                    opts.sort(key=lambda c: c in last_pref)
                for ex in order_fn(opts) if i < p else opts:
                    seq.append(ex)
                    yield from rec(i + 1)
                    seq.pop()
                seq.pop()

        for a in first:
            seq.append(a)
            yield from rec(1)
            seq.pop()

    count = 0
    for cand in dfs(lambda xs: xs):
        if cand not in seen:
            seen.add(cand)
            yield cand
            count += 1
            if count >= limit // 4:
                break

    def shuffled(xs):
        xs = list(xs)
        rng.shuffle(xs)
        return xs

    misses = 0
    while count < limit and misses < limit:
        cand = next(dfs(shuffled), None)
        if cand is None:
            return
        if cand in seen:
            misses += 1
            continue
        seen.add(cand)
        yield cand
        count += 1


def _engine(n: int, edges, vc: dict, ec: dict) -> PathEngine:
    h = Graph(n, frozenset(edges))
    c = TotalColoring(h, tuple(vc.get(v, 1) for v in range(n)), {e: ec.get(e, 1) for e in h.edges})
    return PathEngine(h, c, "tpc")


def _signature(eng: PathEngine, path) -> tuple[int, int]:
    ec, vc = eng.ec, eng.vc
    return ec[path[0]][path[1]], ec[path[-2]][path[-1]]


def color_2connected(g: Graph, seed: int = 0) -> TotalColoring:
    """At most 4 colors; the result also has the strong two-path property."""
    if not is_two_connected(g):
        raise GraphError("color_2connected needs a 2-connected graph")
    s = minimally_2connected_spanning(g)
    dec = ear_decomposition(s)
    rng = random.Random(seed)
    vc: dict[int, int] = {}
    ec: dict[Edge, int] = {}
    _apply_cycle(dec.base_cycle, vc, ec)
    placed = list(dec.base_cycle)
    built = set(ec)
    for ear in dec.ears:
        if not ear.internal:
            built.add(edge_key(ear.u, ear.v))
            ec[edge_key(ear.u, ear.v)] = _leftover_color(g, vc, ec, ear.u, ear.v)
            continue
        _color_ear(g.n, built, vc, ec, placed, ear, rng)
        placed.extend(ear.internal)
        built.update(edge_key(a, b) for a, b in zip(ear.path, ear.path[1:]))
    for e in g.edge_list:
        if e not in ec:
            ec[e] = _leftover_color(g, vc, ec, *e)
    c = _finish(g, vc, ec, "2-connected")
    strong = has_strong_property(g, c)
    if not strong:
        raise ConstructionError(f"2-connected: strong property fails at {strong.failing_pair}")
    return c


def _leftover_color(g: Graph, vc, ec, u: int, v: int) -> int:
    """Lowest color already present at an endpoint, other than both endpoint colors."""
    seen = set()
    for x in (u, v):
        seen.add(vc[x])
        seen.update(ec[edge_key(x, w)] for w in g.adj[x] if edge_key(x, w) in ec)
    options = sorted(seen - {vc[u], vc[v]})
    return options[0] if options else min(set(PALETTE4) - {vc[u], vc[v]})


def _color_ear(n, built, vc, ec, placed, ear, rng):
    path = ear.path
    ear_edges = [edge_key(a, b) for a, b in zip(path, path[1:])]
    eng = _engine(n, built | set(ear_edges), vc, ec)
    old = _engine(n, built, vc, ec)
    wit = strong_pair(old, ear.u, ear.v)
    if wit is None:
        raise ConstructionError(f"2-connected: lost strong pair for {(ear.u, ear.v)}")
    starts = {_signature(old, q)[0] for q in wit}
    ends = {_signature(old, q)[1] for q in wit}
    cu, cv = vc[ear.u], vc[ear.v]
    first = [a for a in PALETTE4 if a != cu and a not in starts]
    first += [a for a in PALETTE4 if a != cu and a in starts]
    new = list(ear.internal)
    pairs = [(x, y) for i, x in enumerate(new) for y in placed + new[:i]]
    tried = 0
    for cand in _ear_candidates(cu, cv, len(new), first, ends, rng, EAR_ATTEMPTS):
        tried += 1
        for i, e in enumerate(ear_edges):
            a, b = e
            eng.ec[a][b] = eng.ec[b][a] = cand[2 * i]
        for i, x in enumerate(new):
            eng.vc[x] = cand[2 * i + 1]
        if all(strong_pair(eng, x, y) is not None for x, y in pairs):
            for i, e in enumerate(ear_edges):
                ec[e] = cand[2 * i]
            for i, x in enumerate(new):
                vc[x] = cand[2 * i + 1]
            return
    raise ConstructionError(f"2-connected: no ear coloring for {path} after {tried} attempts")


# general connected graphs

def color_general(g: Graph) -> TotalColoring:
    """At most ``max(bridge_max_degree + 1, 4)`` colors, built block by block."""
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if g.n == 1:
        return TotalColoring(g, (1,), {})
    prof = structure_profile(g)
    k = max(prof.bridge_max_degree + 1, 4)
    palette = range(1, k + 1)
    bd = block_decomposition(g)
    vc: dict[int, int] = {}
    ec: dict[Edge, int] = {}
    member: dict[int, list[int]] = {}
    for i, b in enumerate(bd.blocks):
        for v in b:
            member.setdefault(v, []).append(i)
    done = [False] * len(bd.blocks)

    def color_block(i, x=None):
        verts = sorted(bd.blocks[i])
        if bd.is_trivial(i):
            a, b = verts
            if x is None:
                vc[a], vc[b], ec[(a, b)] = 1, 2, 3
            else:
                y = b if x == a else a
                at_x = {vc[x]} | {ec[e] for e in ec if x in e}
                ec[edge_key(x, y)] = min(c for c in palette if c not in at_x)
                vc[y] = min(c for c in palette if c not in (vc[x], ec[edge_key(x, y)]))
        else:
            sub, labels = g.subgraph(verts)
            local = color_2connected(sub)
            if x is None:
                sigma = {c: c for c in PALETTE4}
            else:
                cx = local.vertex(labels.index(x))
                window = [(vc[x] - 1 + j) % k + 1 for j in range(4)]
                sigma = {cx: vc[x]}
                sigma.update(zip([c for c in PALETTE4 if c != cx], window[1:]))
            for li, v in enumerate(labels):
                if v != x:
                    vc[v] = sigma[local.vertex(li)]
            for (a, b), col in local.edge_colors.items():
                ec[edge_key(labels[a], labels[b])] = sigma[col]
        done[i] = True

    root = bd.bfs_order[0]
    color_block(root)
    queue = deque([root])
    while queue:
        i = queue.popleft()
        for x in sorted(bd.blocks[i]):
            pending = [j for j in member[x] if not done[j]]
            pending.sort(key=lambda j: (bd.is_trivial(j), j))
            for j in pending:
                color_block(j, x)
                queue.append(j)
    c = _finish(g, vc, ec, "general")
    if c.color_count > k:
        raise ConstructionError(f"general: used {c.color_count} colors, bound {k}")
    return c


# minimum degree bound

REPAIR_ITERATIONS = 20_000


def color_min_degree(g: Graph, seed: int = 0) -> TotalColoring:
    """Colors a connected two-way two-step dominating set D as a tree from colors 4 and
    up, and the two layers around it with colors 1, 2, 3 (plus 4 on the outer layer)."""
    if g.n < 4:
        raise GraphError("color_min_degree needs n >= 4")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    d = two_way_two_step_dominating_set(g)
    lay = layers(g, d)
    dl = sorted(d)
    vc: dict[int, int] = {}
    ec: dict[Edge, int] = {}
    sub, labels = g.subgraph(dl)
    if len(dl) == 1:
        vc[dl[0]] = 4
        tree_palette = [4]
    elif len(dl) == 2:
        vc[dl[0]], vc[dl[1]] = 4, 5
        ec[edge_key(*dl)] = 3
        tree_palette = [4, 5]
    else:
        t = low_degree_tree(sub)
        tree_palette = list(range(4, 4 + t.max_degree + 1))
        lvc, lec = {}, {}
        root = min(range(t.n), key=lambda v: (-t.degree(v), v))
        _tree_colors(t, root, tree_palette, lvc, lec)
        for v, col in lvc.items():
            vc[labels[v]] = col
        for (a, b), col in lec.items():
            ec[edge_key(labels[a], labels[b])] = col
        for a, b in sub.edge_list:
            e = edge_key(labels[a], labels[b])
            if e not in ec:
                ec[e] = min(c for c in tree_palette if c not in (vc[e[0]], vc[e[1]]))

    n1, n2 = sorted(lay.n1), sorted(lay.n2)
    anchor: dict[int, int] = {}
    load = {u: 0 for u in dl}
    for x in n1:
        u = min((w for w in g.adj[x] if w in d), key=lambda w: (load[w], w))
        anchor[x] = u
        load[u] += 1
    parity = _parities(g, anchor, n1, n2)

    for x in n1:
        vc[x] = 3
    for y in n2:
        vc[y] = 4
    for x in n1:
        u = anchor[x]
        ec[edge_key(x, u)] = parity[x]
    for x in n1:
        for w in g.adj[x]:
            e = edge_key(x, w)
            if e in ec:
                continue
            if w in d:
                at_w = {vc[w]} | {ec[edge_key(w, z)] for z in g.adj[w] if edge_key(w, z) in ec}
                free = [c for c in tree_palette if c not in at_w]
                ec[e] = free[0] if free else 3 - parity[x]
            elif w in lay.n2:
                ec[e] = 3 - parity[x]
            else:
                ec[e] = 4
    for y in n2:
        for w in g.adj[y]:
            ec.setdefault(edge_key(y, w), 3)

    c = TotalColoring.build(g, vc, ec)
    if is_total_proper_connected(g, c).connected:
        return c
    log.info("min-degree: first attempt fails, running local repair")
    top = max(c.palette)
    mutable = [v for v in range(g.n) if v not in d]
    mutable += [e for e in g.edge_list if not (e[0] in d and e[1] in d)]
    fixed = improve_coloring(g, c, list(range(1, top + 1)), mutable, REPAIR_ITERATIONS,
                             random.Random(seed))
    if fixed is None:
        raise ConstructionError("min-degree: local repair exhausted its budget")
    return _finish(g, fixed.vertex_colors, fixed.edge_colors, "min-degree")


def _parities(g: Graph, anchor: dict[int, int], n1: list[int], n2: list[int]) -> dict[int, int]:
    """Alternate parities among vertices sharing an anchor, then flip parities so that
    every outer vertex sees two different (anchor, parity) options where possible."""
    parity: dict[int, int] = {}
    count: dict[int, int] = {}
    for x in n1:
        u = anchor[x]
        parity[x] = 1 + count.get(u, 0) % 2
        count[u] = count.get(u, 0) + 1
    n1set = set(n1)

    def options(y):
        return {(anchor[x], parity[x]) for x in g.adj[y] if x in n1set}

    def unhappy():
        return sum(1 for y in n2 if len(options(y)) < 2)

    bad = unhappy()
    for _ in range(len(n1)):
        if bad == 0:
            break
        improved = False
        for x in n1:
            parity[x] = 3 - parity[x]
            now = unhappy()
            if now < bad:
                bad, improved = now, True
            else:
                parity[x] = 3 - parity[x]
        if not improved:
            break
    return parity


CONSTRUCTORS: dict[str, Callable[[Graph], TotalColoring]] = {
    "complete": color_complete,
    "tree": color_tree,
    "cycle": color_cycle_graph,
    "bipartite": color_multipartite_graph,
    "multipartite": color_multipartite_graph,
    "2connected": color_2connected,
    "general": color_general,
    "min_degree": color_min_degree,
    "traceable": color_hamiltonian,
}
