"""Total colorings, the total-proper-path predicate, and the coloring file format."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, GraphError, edge_key


class ColoringError(ValueError):
    pass


PathWitness = tuple[int, ...]


@dataclass(frozen=True)
class TotalColoring:
    """Positive-integer colors on every vertex and every edge of ``graph``."""

    graph: Graph = field(repr=False)
    vertex_colors: tuple[int, ...]
    edge_colors: Mapping[Edge, int]

    def __post_init__(self):
        g = self.graph
        if len(self.vertex_colors) != g.n:
            raise ColoringError(f"expected {g.n} vertex colors, got {len(self.vertex_colors)}")
        for v, c in enumerate(self.vertex_colors):
            if not isinstance(c, int) or c < 1:
                raise ColoringError(f"vertex {v}: color must be a positive integer, got {c!r}")
        if set(self.edge_colors) != set(g.edges):
            missing = sorted(set(g.edges) - set(self.edge_colors))
            extra = sorted(set(self.edge_colors) - set(g.edges))
            raise ColoringError(f"edge colors mismatch: missing {missing[:3]}, unknown {extra[:3]}")
        for e, c in self.edge_colors.items():
            if not isinstance(c, int) or c < 1:
                raise ColoringError(f"edge {e}: color must be a positive integer, got {c!r}")

    @classmethod
    def build(cls, g: Graph, vertex_colors: Sequence[int] | Mapping[int, int],
              edge_colors: Mapping[Edge, int]) -> "TotalColoring":
        if isinstance(vertex_colors, Mapping):
            vc = tuple(vertex_colors[v] for v in range(g.n)) if len(vertex_colors) == g.n else None
            if vc is None:
                missing = [v for v in range(g.n) if v not in vertex_colors]
                raise ColoringError(f"uncolored vertices {missing[:5]}")
        else:
            vc = tuple(vertex_colors)
        ec = {edge_key(u, v): c for (u, v), c in edge_colors.items()}
        return cls(g, vc, ec)

    def vertex(self, v: int) -> int:
        return self.vertex_colors[v]

    def edge(self, u: int, v: int) -> int:
        return self.edge_colors[edge_key(u, v)]

    @cached_property
    def palette(self) -> frozenset[int]:
        return frozenset(self.vertex_colors) | frozenset(self.edge_colors.values())

    @property
    def color_count(self) -> int:
        return len(self.palette)

    @property
    def edge_color_count(self) -> int:
        return len(set(self.edge_colors.values()))

    @property
    def vertex_color_count(self) -> int:
        return len(set(self.vertex_colors))

    def recolored(self, mapping: Mapping[int, int]) -> "TotalColoring":
        """Apply a color substitution (colors missing from ``mapping`` are kept)."""
        return TotalColoring(
            self.graph,
            tuple(mapping.get(c, c) for c in self.vertex_colors),
            {e: mapping.get(c, c) for e, c in self.edge_colors.items()},
        )

    def edge_matrix(self) -> list[list[int]]:
        """Dense ``n x n`` edge-color lookup, 0 where there is no edge."""
        n = self.graph.n
        mat = [[0] * n for _ in range(n)]
        for (u, v), c in self.edge_colors.items():
            mat[u][v] = mat[v][u] = c
        return mat


def uniform_coloring(g: Graph, color: int = 1) -> TotalColoring:
    return TotalColoring(g, (color,) * g.n, {e: color for e in g.edges})


def check_path(g: Graph, p: Sequence[int]) -> None:
    if len(p) < 1:
        raise ColoringError("empty path")
    if len(set(p)) != len(p):
        raise ColoringError(f"path repeats a vertex: {tuple(p)}")
    for x in p:
        if not 0 <= x < g.n:
            raise ColoringError(f"vertex {x} out of range")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise ColoringError(f"path uses non-edge ({a}, {b})")


def is_total_proper_path(g: Graph, c: TotalColoring, p: Sequence[int]) -> bool:
    check_path(g, p)
    s = len(p)
    for i in range(1, s - 1):
        prev_e = c.edge(p[i - 1], p[i])
        next_e = c.edge(p[i], p[i + 1])
        cv = c.vertex(p[i])
        if prev_e == next_e:  # adjacent edges
            return False
        if cv == prev_e or cv == next_e:  # internal vertex vs incident path edges
            return False
        if i + 1 < s - 1 and cv == c.vertex(p[i + 1]):  # adjacent internal vertices
            return False
    return True


def path_endpoints_colors(c: TotalColoring, p: Sequence[int]) -> tuple[int, int, int, int]:
    """``(start_e, end_e, start_v, end_v)``.

    For a single edge ``v1 vs`` the start vertex color is taken from ``vs`` and the
    end vertex color from ``v1``.
    """
    if len(p) < 2:
        raise ColoringError("path needs at least two vertices")
    if len(p) == 2:
        e = c.edge(p[0], p[1])
        return e, e, c.vertex(p[1]), c.vertex(p[0])
    return c.edge(p[0], p[1]), c.edge(p[-2], p[-1]), c.vertex(p[1]), c.vertex(p[-2])


def colors_at(g: Graph, c: TotalColoring, v: int) -> frozenset[int]:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return frozenset([c.vertex(v), *(c.edge(v, u) for u in g.adj[v])])


def serialize_coloring(c: TotalColoring) -> str:
    lines = [f"v {v} {col}" for v, col in enumerate(c.vertex_colors)]
    lines += [f"e {u} {v} {c.edge_colors[(u, v)]}" for u, v in c.graph.edge_list]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph) -> TotalColoring:
    vc: dict[int, int] = {}
    ec: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 3:
                v, col = int(parts[1]), int(parts[2])
                if not 0 <= v < g.n:
                    raise ColoringError(f"line {lineno}: unknown vertex {v}")
                if v in vc:
                    raise ColoringError(f"line {lineno}: vertex {v} colored twice")
                key, store = v, vc
            elif parts[0] == "e" and len(parts) == 4:
                u, v, col = int(parts[1]), int(parts[2]), int(parts[3])
                e = edge_key(u, v)
                if e not in g.edges:
                    raise ColoringError(f"line {lineno}: unknown edge {e}")
                if e in ec:
                    raise ColoringError(f"line {lineno}: edge {e} colored twice")
                key, store = e, ec
            else:
                raise ColoringError(f"line {lineno}: malformed {raw!r}")
        except ValueError as exc:
            if isinstance(exc, ColoringError):
                raise
            raise ColoringError(f"line {lineno}: non-integer token in {raw!r}") from None
        if col < 1:
            raise ColoringError(f"line {lineno}: color must be >= 1, got {col}")
        store[key] = col
    missing_v = [v for v in range(g.n) if v not in vc]
    if missing_v:
        raise ColoringError(f"uncolored vertex {missing_v[0]}")
    missing_e = [e for e in g.edge_list if e not in ec]
    if missing_e:
        raise ColoringError(f"uncolored edge {missing_e[0][0]} {missing_e[0][1]}")
    return TotalColoring(g, tuple(vc[v] for v in range(g.n)), ec)


def from_sequences(g: Graph, elements: Iterable[int]) -> TotalColoring:
    """Colors listed in element order: vertices ``0..n-1`` then edges lexicographically."""
    seq = list(elements)
    if len(seq) != g.n + g.m:
        raise ColoringError("wrong number of element colors")
    return TotalColoring(g, tuple(seq[:g.n]), dict(zip(g.edge_list, seq[g.n:])))
