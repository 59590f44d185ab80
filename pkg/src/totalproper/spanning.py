"""Spanning trees (BFS, low max-degree, exact min max-degree) and Hamiltonian paths."""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, GraphError, edge_key

EXHAUSTIVE_MAX_N = 10


def bfs_tree(g: Graph, root: int = 0) -> Graph:
    seen = {root}
    edges = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                edges.append(edge_key(x, y))
                queue.append(y)
    if len(seen) != g.n:
        raise GraphError("graph is disconnected")
    return Graph(g.n, frozenset(edges))


def _tree_path(adj: list[set[int]], a: int, b: int) -> list[int]:
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in sorted(adj[x]):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def low_degree_tree(g: Graph) -> Graph:
    """Best-effort low max-degree spanning tree by local edge swaps.

    Repeatedly looks for a non-tree edge whose endpoints have degree at most
    ``k - 2`` and whose fundamental cycle passes through a degree-``k`` vertex
    (``k`` the current maximum), then swaps it in. No optimality guarantee.
    """
    t = bfs_tree(g)
    adj = [set(a) for a in t.adj]
    improved = True
    while improved:
        improved = False
        k = max(len(a) for a in adj)
        if k <= 2:
            break
        for u, v in g.edge_list:
            if v in adj[u] or len(adj[u]) > k - 2 or len(adj[v]) > k - 2:
                continue
            cyc = _tree_path(adj, u, v)
            hubs = [x for x in cyc[1:-1] if len(adj[x]) == k]
            if not hubs:
                continue
            w = hubs[0]
            i = cyc.index(w)
            drop = cyc[i + 1]
            adj[w].discard(drop)
            adj[drop].discard(w)
            adj[u].add(v)
            adj[v].add(u)
            improved = True
            break
    return Graph(g.n, frozenset(edge_key(x, y) for x in range(g.n) for y in adj[x] if x < y))


def _bounded_degree_tree(g: Graph, bound: int) -> list[Edge] | None:
    """Backtracking search for a spanning tree with max degree <= bound."""
    edges = g.edge_list
    n = g.n
    deg = [0] * n
    parent = list(range(n))
    chosen: list[Edge] = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int) -> bool:
        if len(chosen) == n - 1:
            return True
        if len(edges) - i < n - 1 - len(chosen):
            return False
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv and deg[u] < bound and deg[v] < bound:
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            if rec(i + 1):
                return True
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            parent[ru] = ru
        return rec(i + 1)

    return list(chosen) if rec(0) else None


def spanning_tree(g: Graph, strategy: str = "bfs") -> Graph:
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if strategy == "bfs":
        return bfs_tree(g)
    if strategy == "min_max_degree_heuristic":
        return low_degree_tree(g)
    if strategy == "exhaustive_min_delta":
        if g.n > EXHAUSTIVE_MAX_N:
            raise GraphError(f"exhaustive spanning tree search capped at n <= {EXHAUSTIVE_MAX_N}")
        if g.n <= 2:
            return bfs_tree(g)
        for bound in range(2, g.n):
            found = _bounded_degree_tree(g, bound)
            if found is not None:
                return Graph(g.n, frozenset(found))
        raise GraphError("internal: no spanning tree found")
    raise GraphError(f"unknown spanning tree strategy {strategy!r}")


def hamiltonian_path(g: Graph) -> list[int] | None:
    """Backtracking search; intended for n <= 20."""
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return [0]
    if not g.is_connected():
        return None
    adj = g.adj
    on = [False] * n
    path: list[int] = []

    def reachable_ok(last: int) -> bool:
        # the unvisited vertices must stay reachable from the path end
        rest = n - len(path)
        seen = {last}
        queue = [last]
        count = 0
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if not on[y] and y not in seen:
                    seen.add(y)
                    count += 1
                    queue.append(y)
        return count == rest

    def rec(x: int) -> bool:
        if len(path) == n:
            return True
        if not reachable_ok(x):
            return False
        for y in sorted(adj[x], key=lambda z: (len(adj[z]), z)):
            if not on[y]:
                on[y] = True
                path.append(y)
                if rec(y):
                    return True
                path.pop()
                on[y] = False
        return False

    # start at degree-1 vertices first, since they must be path ends
    starts = sorted(range(n), key=lambda v: (len(adj[v]) != 1, v))
    for s in starts:
        on[s] = True
        path.append(s)
        if rec(s):
            return list(path)
        path.pop()
        on[s] = False
    return None
