"""Deterministic generators for the named graph families, including two extremal
constructions built from a cycle plus parallel ears, and seeded random families."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import graph as G
from .graph import Graph, GraphError, edge_key
from .structure import is_two_connected

KINDS = ("path", "cycle", "complete", "complete_bipartite", "complete_multipartite", "star",
         "prop3", "prop4", "random_connected", "random_2connected", "random_min_degree")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    seed: int | None = None


@dataclass(frozen=True)
class Family:
    graph: Graph
    landmarks: dict[str, int] = field(default_factory=dict)


def _need(params, count, kind):
    if len(params) != count:
        raise GraphError(f"{kind} takes {count} parameter(s), got {len(params)}")


def ear_graph(k: int) -> Family:
    """Even cycle split into segments A, B, C, D of ``2**k`` edges each, plus ears
    A' and C' of the same length joining the ends of A and of C.

    Cycle vertices ``0..4L-1`` run u1 -A- u2 -B- u3 -C- u4 -D- u1 with ``L = 2**k``.
    Landmarks: ``u_i`` and its neighbours ``u_i'`` (on B or D), ``u_i''`` (on A or C)
    and ``u_i'''`` (on the ear).
    """
    if k < 2:
        raise GraphError("prop3 needs k >= 2")
    L = 2 ** k
    cyc = 4 * L
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    u1, u2, u3, u4 = 0, L, 2 * L, 3 * L
    nxt = cyc
    ears = {}
    for name, (a, b) in (("A'", (u1, u2)), ("C'", (u3, u4))):
        internal = list(range(nxt, nxt + L - 1))
        nxt += L - 1
        seq = [a, *internal, b]
        edges += list(zip(seq, seq[1:]))
        ears[name] = seq
    g = Graph.from_edges(nxt, edges)
    lm = {"u1": u1, "u2": u2, "u3": u3, "u4": u4,
          "u1'": cyc - 1, "u1''": 1, "u1'''": ears["A'"][1],
          "u2'": u2 + 1, "u2''": u2 - 1, "u2'''": ears["A'"][-2],
          "u3'": u3 - 1, "u3''": u3 + 1, "u3'''": ears["C'"][1],
          "u4'": u4 + 1, "u4''": u4 - 1, "u4'''": ears["C'"][-2]}
    return Family(g, lm)


def three_ear_graph(t: int) -> Family:
    """Cycle of three segments with ``6t`` edges each; every segment gets a parallel
    ear of length 3 between its ends."""
    if t < 1:
        raise GraphError("prop4 needs t >= 1")
    seg = 6 * t
    cyc = 3 * seg
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    ends = [0, seg, 2 * seg]
    nxt = cyc
    lm = {"a1": 0, "a2": seg, "a3": 2 * seg}
    for i in range(3):
        a, b = ends[i], ends[(i + 1) % 3]
        x, y = nxt, nxt + 1
        nxt += 2
        edges += [(a, x), (x, y), (y, b)]
    return Family(Graph.from_edges(nxt, edges), lm)


def random_connected(n: int, m: int, seed: int) -> Graph:
    if n < 1 or not (n - 1 <= m <= n * (n - 1) // 2):
        raise GraphError(f"random_connected: need n-1 <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        edges.add(edge_key(perm[i], perm[rng.randrange(i)]))
    rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(rest)
    edges.update(rest[:m - len(edges)])
    return Graph(n, frozenset(edges))


def random_2connected(n: int, seed: int) -> Graph:
    """Random cycle grown by random open ears, plus a few random chords."""
    if n < 3:
        raise GraphError("random_2connected needs n >= 3")
    rng = random.Random(seed)
    labels = list(range(n))
    rng.shuffle(labels)
    size = rng.randint(3, n)
    verts = labels[:size]
    edges = {edge_key(verts[i], verts[(i + 1) % size]) for i in range(size)}
    placed = list(verts)
    pos = size
    while pos < n:
        length = rng.randint(1, n - pos)
        internal = labels[pos:pos + length]
        pos += length
        a, b = rng.sample(placed, 2)
        seq = [a, *internal, b]
        edges.update(edge_key(x, y) for x, y in zip(seq, seq[1:]))
        placed.extend(internal)
    non = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(non)
    edges.update(non[:rng.randint(0, min(len(non), n))])
    g = Graph(n, frozenset(edges))
    assert is_two_connected(g)
    return g


def random_min_degree(n: int, delta: int, seed: int) -> Graph:
    """Stub pairing for a near-regular graph, then degree repair and component joining."""
    if delta < 1 or n <= delta:
        raise GraphError(f"random_min_degree needs 1 <= delta < n, got n={n}, delta={delta}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(delta)]
    rng.shuffle(stubs)
    edges = set()
    for a, b in zip(stubs[::2], stubs[1::2]):
        if a != b:
            edges.add(edge_key(a, b))
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        while deg[v] < delta:
            cands = [w for w in range(n) if w != v and edge_key(v, w) not in edges]
            w = min(rng.sample(cands, min(3, len(cands))), key=lambda x: (deg[x], x))
            edges.add(edge_key(v, w))
            deg[v] += 1
            deg[w] += 1
    g = Graph(n, frozenset(edges))
    while not g.is_connected():
        dist = g.bfs_distances(0)
        inside = [v for v in range(n) if dist[v] != float("inf")]
        outside = [v for v in range(n) if dist[v] == float("inf")]
        edges.add(edge_key(rng.choice(inside), rng.choice(outside)))
        g = Graph(n, frozenset(edges))
    return g


def generate(spec: FamilySpec) -> Family:
    kind, p = spec.kind, tuple(spec.params)
    if kind == "path":
        _need(p, 1, kind)
        if p[0] < 1:
            raise GraphError("path needs n >= 1")
        return Family(G.path_graph(p[0]))
    if kind == "cycle":
        _need(p, 1, kind)
        return Family(G.cycle_graph(p[0]))
    if kind == "complete":
        _need(p, 1, kind)
        if p[0] < 1:
            raise GraphError("complete needs n >= 1")
        return Family(G.complete_graph(p[0]))
    if kind == "complete_bipartite":
        _need(p, 2, kind)
        if min(p) < 1:
            raise GraphError("part sizes must be positive")
        return Family(G.complete_bipartite_graph(*p))
    if kind == "complete_multipartite":
        if len(p) < 2:
            raise GraphError("complete_multipartite needs at least two parts")
        return Family(G.complete_multipartite_graph(list(p)))
    if kind == "star":
        _need(p, 1, kind)
        if p[0] < 1:
            raise GraphError("star needs at least one leaf")
        return Family(G.star_graph(p[0]))
    if kind == "prop3":
        _need(p, 1, kind)
        return ear_graph(p[0])
    if kind == "prop4":
        _need(p, 1, kind)
        return three_ear_graph(p[0])
    if kind in ("random_connected", "random_2connected", "random_min_degree"):
        if spec.seed is None:
            raise GraphError(f"{kind} needs a seed")
        if kind == "random_connected":
            _need(p, 2, kind)
            return Family(random_connected(p[0], p[1], spec.seed))
        if kind == "random_2connected":
            _need(p, 1, kind)
            return Family(random_2connected(p[0], spec.seed))
        _need(p, 2, kind)
        return Family(random_min_degree(p[0], p[1], spec.seed))
    raise GraphError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
