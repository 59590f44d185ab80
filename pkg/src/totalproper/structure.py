"""Connectivity structure: bridges, blocks, ear decompositions."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graph import Edge, Graph, GraphError, edge_key


@dataclass(frozen=True)
class StructureProfile:
    connected: bool
    bridges: frozenset[Edge]
    b: int  # max bridges at one vertex
    bridge_max_degree: int  # max degree over bridge endpoints, 0 without bridges
    diameter: float  # math.inf when disconnected
    complete: bool


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[frozenset[int]]
    block_edges: list[frozenset[Edge]]
    cut_vertices: frozenset[int]
    block_graph: Graph
    bfs_order: list[int]
    parent: dict[int, int | None]

    def is_trivial(self, i: int) -> bool:
        return len(self.blocks[i]) == 2


@dataclass(frozen=True)
class Ear:
    u: int
    v: int
    internal: tuple[int, ...]

    @property
    def path(self) -> tuple[int, ...]:
        return (self.u, *self.internal, self.v)


@dataclass(frozen=True)
class EarDecomposition:
    base_cycle: tuple[int, ...]
    ears: list[Ear]


def _dfs_lowpoints(g: Graph, root: int):
    """Iterative DFS returning (order, parent, disc, low) for the component of ``root``."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent: list[int] = [-1] * g.n
    order = []
    disc[root] = low[root] = 0
    order.append(root)
    stack = [(root, iter(g.adj[root]))]
    t = 1
    while stack:
        x, it = stack[-1]
        advanced = False
        for y in it:
            if disc[y] == -1:
                parent[y] = x
                disc[y] = low[y] = t
                t += 1
                order.append(y)
                stack.append((y, iter(g.adj[y])))
                advanced = True
                break
            if y != parent[x]:
                low[x] = min(low[x], disc[y])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
    return order, parent, disc, low


def find_bridges(g: Graph) -> frozenset[Edge]:
    found = set()
    seen = [False] * g.n
    for r in range(g.n):
        if seen[r]:
            continue
        order, parent, disc, low = _dfs_lowpoints(g, r)
        for v in order:
            seen[v] = True
            p = parent[v]
            if p != -1 and low[v] > disc[p]:
                found.add(edge_key(p, v))
    return frozenset(found)


def articulation_points(g: Graph) -> frozenset[int]:
    cuts = set()
    seen = [False] * g.n
    for r in range(g.n):
        if seen[r]:
            continue
        order, parent, disc, low = _dfs_lowpoints(g, r)
        children = [0] * g.n
        for v in order:
            seen[v] = True
            p = parent[v]
            if p == -1:
                continue
            children[p] += 1
            if p != r and low[v] >= disc[p]:
                cuts.add(p)
        if children[r] >= 2:
            cuts.add(r)
    return frozenset(cuts)


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and not articulation_points(g)


def diameter(g: Graph) -> float:
    if g.n == 0:
        return 0
    return max(max(g.bfs_distances(s)) for s in range(g.n))


def structure_profile(g: Graph) -> StructureProfile:
    bridges = find_bridges(g)
    count = [0] * g.n
    for u, v in bridges:
        count[u] += 1
        count[v] += 1
    ends = {x for e in bridges for x in e}
    return StructureProfile(
        connected=g.is_connected(),
        bridges=bridges,
        b=max(count, default=0),
        bridge_max_degree=max((g.degree(x) for x in ends), default=0),
        diameter=diameter(g),
        complete=g.is_complete(),
    )


def _biconnected_edge_sets(g: Graph) -> list[frozenset[Edge]]:
    """Edge sets of the biconnected components (Hopcroft-Tarjan with an edge stack)."""
    comps = []
    disc = [-1] * g.n
    low = [0] * g.n
    t = 0
    for r in range(g.n):
        if disc[r] != -1 or not g.adj[r]:
            continue
        disc[r] = low[r] = t
        t += 1
        edge_stack: list[Edge] = []
        stack = [(r, -1, iter(g.adj[r]))]
        while stack:
            x, px, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    edge_stack.append(edge_key(x, y))
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, x, iter(g.adj[y])))
                    advanced = True
                    break
                if y != px and disc[y] < disc[x]:
                    edge_stack.append(edge_key(x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] >= disc[p]:
                    comp = set()
                    target = edge_key(p, x)
                    while True:
                        e = edge_stack.pop()
                        comp.add(e)
                        if e == target:
                            break
                    comps.append(frozenset(comp))
    return comps


def block_decomposition(g: Graph, root: int = 0) -> BlockDecomposition:
    """Blocks ordered by their sorted vertex tuples; BFS over the block graph from the
    lowest-index block containing ``root``."""
    if g.n == 0 or not g.is_connected():
        raise GraphError("block decomposition needs a connected graph")
    if g.n == 1:
        raise GraphError("block decomposition needs at least one edge")
    raw = _biconnected_edge_sets(g)
    keyed = sorted(((tuple(sorted({x for e in es for x in e})), es) for es in raw))
    blocks = [frozenset(vs) for vs, _ in keyed]
    block_edges = [es for _, es in keyed]
    member: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            member.setdefault(v, []).append(i)
    cuts = frozenset(v for v, bs in member.items() if len(bs) >= 2)
    bg_edges = set()
    for v in cuts:
        bs = member[v]
        for i in range(len(bs)):
            for j in range(i + 1, len(bs)):
                bg_edges.add(edge_key(bs[i], bs[j]))
    block_graph = Graph(len(blocks), frozenset(bg_edges))
    start = min(member[root])
    parent: dict[int, int | None] = {start: None}
    order = [start]
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for j in block_graph.adj[i]:
            if j not in parent:
                parent[j] = i
                order.append(j)
                queue.append(j)
    return BlockDecomposition(blocks, block_edges, cuts, block_graph, order, parent)


def ear_decomposition(g: Graph) -> EarDecomposition:
    """Open ear decomposition via DFS chain decomposition."""
    if not is_two_connected(g):
        raise GraphError("ear decomposition needs a 2-connected graph")
    parent = [-1] * g.n
    disc = [-1] * g.n
    order = []
    disc[0] = 0
    order.append(0)
    stack = [(0, iter(g.adj[0]))]
    while stack:
        x, it = stack[-1]
        for y in it:
            if disc[y] == -1:
                parent[y] = x
                disc[y] = len(order)
                order.append(y)
                stack.append((y, iter(g.adj[y])))
                break
        else:
            stack.pop()
    tree = {edge_key(v, parent[v]) for v in range(g.n) if parent[v] != -1}
    visited = [False] * g.n
    chains: list[list[int]] = []
    for v in order:
        # back edges v -> w where v is the ancestor (w deeper)
        backs = sorted((w for w in g.adj[v] if edge_key(v, w) not in tree and disc[w] > disc[v]),
                       key=lambda w: disc[w])
        for w in backs:
            visited[v] = True
            chain = [v]
            x = w
            while not visited[x]:
                visited[x] = True
                chain.append(x)
                x = parent[x]
            chain.append(x)
            chains.append(chain)
    first = chains[0]
    if first[0] != first[-1]:
        raise GraphError("internal: first chain is not a cycle")
    base = tuple(first[:-1])
    ears = [Ear(c[0], c[-1], tuple(c[1:-1])) for c in chains[1:]]
    return EarDecomposition(base, ears)


def minimally_2connected_spanning(g: Graph) -> Graph:
    """Greedy single pass over edges in lexicographic order; one pass suffices because
    2-connectivity is monotone under edge addition."""
    if not is_two_connected(g):
        raise GraphError("needs a 2-connected graph")
    h = g
    for e in g.edge_list:
        cand = h.without_edge(e)
        if is_two_connected(cand):
            h = cand
    return h


def check_ear_decomposition(g: Graph, dec: EarDecomposition) -> None:
    """Raise AssertionError unless ``dec`` is a valid open ear decomposition of ``g``."""
    cyc = dec.base_cycle
    assert len(cyc) >= 3 and len(set(cyc)) == len(cyc)
    used_edges = set()
    for i in range(len(cyc)):
        e = edge_key(cyc[i], cyc[(i + 1) % len(cyc)])
        assert g.has_edge(*e), f"base cycle edge {e} missing"
        used_edges.add(e)
    seen = set(cyc)
    for ear in dec.ears:
        assert ear.u in seen and ear.v in seen and ear.u != ear.v
        assert not (set(ear.internal) & seen) and len(set(ear.internal)) == len(ear.internal)
        p = ear.path
        for a, b in zip(p, p[1:]):
            e = edge_key(a, b)
            assert g.has_edge(*e) and e not in used_edges
            used_edges.add(e)
        seen.update(ear.internal)
    assert seen == set(range(g.n))
    assert used_edges == set(g.edges)


def shortest_path(g: Graph, sources: set[int], targets: set[int]) -> list[int] | None:
    """Vertex sequence from some source to the nearest target (lowest indices on ties)."""
    prev = {s: None for s in sorted(sources)}
    queue = deque(sorted(sources))
    while queue:
        x = queue.popleft()
        if x in targets:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in g.adj[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def distances_from_set(g: Graph, sources) -> list[float]:
    dist = [math.inf] * g.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist
