"""Simple undirected graphs on vertices ``0..n-1`` and the edge-list file format."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graph input or unmet structural preconditions."""


Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph. ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not canonical or out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = edge_key(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adj(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for lst in nbrs:
            lst.sort()
        return nbrs

    @cached_property
    def adj_sets(self) -> list[frozenset[int]]:
        return [frozenset(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def bfs_distances(self, source: int) -> list[float]:
        dist = [math.inf] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if dist[y] == math.inf:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d < math.inf for d in self.bfs_distances(0))

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the new-to-old map."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(old), frozenset(edge_key(a, b) for a, b in edges)), old

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph on the same vertex set."""
        es = frozenset(edge_key(u, v) for u, v in edges)
        if not es <= self.edges:
            raise GraphError("edge_subgraph: edges not in host graph")
        return Graph(self.n, es)

    def without_edge(self, e: Edge) -> "Graph":
        return Graph(self.n, self.edges - {e})


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    header = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer token in {raw!r}") from None
        if len(nums) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        if header is None:
            if nums[0] < 0 or nums[1] < 0:
                raise GraphError(f"line {lineno}: negative count in header")
            header = (nums[0], nums[1])
            continue
        u, v = nums
        n = header[0]
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: endpoint out of range for n={n}: {raw!r}")
        e = edge_key(u, v)
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], frozenset(edges))


def format_graph(g: Graph, landmarks: dict[str, int] | None = None) -> str:
    lines = [f"{g.n} {g.m}"]
    for name, v in (landmarks or {}).items():
        lines.append(f"# landmark {name} {v}")
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def parse_landmarks(text: str) -> dict[str, int]:
    out = {}
    for line in text.splitlines():
        parts = line.split()
        if len(parts) == 4 and parts[0] == "#" and parts[1] == "landmark":
            out[parts[2]] = int(parts[3])
    return out


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite_graph(parts: list[int]) -> Graph:
    if any(p < 1 for p in parts):
        raise GraphError("part sizes must be positive")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    n = len(label)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """``U = 0..m-1`` and ``V = m..m+n-1``."""
    return complete_multipartite_graph([m, n])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
