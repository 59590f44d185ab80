"""Exact tpc / pc / pvc on small graphs.

Colorings are enumerated element by element (vertices ``0..n-1`` then edges in
lexicographic order). With symmetry breaking on, each new color must be exactly
one more than the largest color used so far, which removes palette
permutations. After every assignment each vertex pair must still admit a path
that is proper when all unassigned elements are treated as fresh distinct
colors; otherwise the branch is cut. That test is conservative, so the minimum
is never missed.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .coloring import TotalColoring
from .graph import Graph, GraphError
from .structure import diameter
from .verifier import is_total_proper_connected

DEFAULT_CAP = 16


class InfeasibleError(RuntimeError):
    """The instance exceeds the configured size cap; no answer is given."""


@dataclass
class SolveResult:
    value: int
    certificate: TotalColoring
    colorings_tested: int
    elapsed: float


class _Search:
    def __init__(self, g: Graph, k: int, mode: str, symmetry: bool, max_nodes: int | None):
        self.g = g
        self.k = k
        self.mode = mode
        self.symmetry = symmetry
        self.max_nodes = max_nodes
        n = g.n
        self.eid = [[-1] * n for _ in range(n)]
        for i, (u, v) in enumerate(g.edge_list):
            self.eid[u][v] = self.eid[v][u] = n + i
        size = n + g.m
        self.col = [0] * size
        if mode == "pc":
            # vertex colors play no role; pin them so only edges are searched
            for v in range(n):
                self.col[v] = 1
            self.order = list(range(n, size))
        else:
            self.order = list(range(size))
        self.pairs = list(combinations(range(n), 2))
        self.witness: dict[tuple[int, int], tuple[int, ...] | None] = {p: None for p in self.pairs}
        self.nodes = 0

    def _ok(self, a, b, c, s) -> bool:
        col, eid = self.col, self.eid
        mode = self.mode
        if mode != "pvc":
            e1, e2 = col[eid[a][b]], col[eid[b][c]]
            if e1 and e1 == e2:
                return False
            if mode == "tpc":
                vb = col[b]
                if vb and (vb == e1 or vb == e2):
                    return False
        if mode != "pc" and a != s:
            va, vb = col[a], col[b]
            if va and va == vb:
                return False
        return True

    def _valid(self, p) -> bool:
        s = p[0]
        ok = self._ok
        for i in range(1, len(p) - 1):
            if not ok(p[i - 1], p[i], p[i + 1], s):
                return False
        return True

    def _find(self, s, t):
        adj, ok = self.g.adj, self._ok
        on = [False] * self.g.n
        on[s] = True
        path = [s]

        def rec(a, b):
            for c in adj[b]:
                if on[c] or not ok(a, b, c, s):
                    continue
                path.append(c)
                if c == t:
                    return True
                on[c] = True
                if rec(b, c):
                    return True
                on[c] = False
                path.pop()
            return False

        for b in adj[s]:
            path.append(b)
            if b == t:
                return tuple(path)
            on[b] = True
            if rec(s, b):
                return tuple(path)
            on[b] = False
            path.pop()
        return None

    def consistent(self) -> bool:
        wit = self.witness
        for i, pr in enumerate(self.pairs):
            p = wit[pr]
            if p is not None and self._valid(p):
                continue
            p = self._find(*pr)
            if p is None:
                # fail-first: check this pair early next time
                if i:
                    self.pairs.insert(0, self.pairs.pop(i))
                return False
            wit[pr] = p
        return True

    def run(self, prefix=()) -> bool:
        col, order, k = self.col, self.order, self.k
        for idx, c in zip(order, prefix):
            col[idx] = c
        if not self.consistent():
            return False
        top = max((col[i] for i in order[:len(prefix)]), default=0)

        def rec(i, top):
            if i == len(order):
                return True
            self.nodes += 1
            if self.max_nodes is not None and self.nodes > self.max_nodes:
                raise InfeasibleError(f"node budget {self.max_nodes} exhausted")
            x = order[i]
            hi = min(top + 1, k) if self.symmetry else k
            for c in range(1, hi + 1):
                col[x] = c
                if self.consistent() and rec(i + 1, max(top, c)):
                    return True
            col[x] = 0
            return False

        return rec(len(prefix), top)

    def certificate(self) -> TotalColoring:
        n = self.g.n
        return TotalColoring(self.g, tuple(self.col[:n]),
                             {e: self.col[n + i] for i, e in enumerate(self.g.edge_list)})


def _prefixes(g: Graph, k: int, mode: str, symmetry: bool, depth: int):
    s = _Search(g, k, mode, symmetry, None)
    out = []

    def rec(i, top, acc):
        if i == depth or i == len(s.order):
            out.append(tuple(acc))
            return
        hi = min(top + 1, k) if symmetry else k
        for c in range(1, hi + 1):
            rec(i + 1, max(top, c), acc + [c])

    rec(0, 0, [])
    return out


def _run_prefix(args):
    g, k, mode, symmetry, max_nodes, prefix = args
    s = _Search(g, k, mode, symmetry, max_nodes)
    found = s.run(prefix)
    return found, (s.certificate() if found else None), s.nodes


def _solve(g: Graph, mode: str, cap: int, start: int, symmetry: bool,
           max_nodes: int | None, workers: int) -> SolveResult:
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    size = g.n + g.m if mode == "tpc" else g.m
    if size > cap:
        raise InfeasibleError(f"{size} colored elements exceed cap {cap}; infeasible at this size")
    t0 = time.perf_counter()
    tested = 0
    k = max(start, 1)
    while True:
        if workers <= 1:
            s = _Search(g, k, mode, symmetry, max_nodes)
            found = s.run()
            tested += s.nodes
            cert = s.certificate() if found else None
        else:
            depth = min(size, 4)
            jobs = [(g, k, mode, symmetry, max_nodes, p) for p in _prefixes(g, k, mode, symmetry, depth)]
            found, cert = False, None
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for ok, c, nodes in pool.map(_run_prefix, jobs):
                    tested += nodes
                    if ok and not found:
                        found, cert = True, c
        if found:
            report = is_total_proper_connected(g, cert, mode)
            if not report.connected:
                raise AssertionError(f"solver certificate failed verification at pair {report.failing_pair}")
            return SolveResult(k, cert, tested, time.perf_counter() - t0)
        k += 1


def tpc_lower_bound(g: Graph) -> int:
    return 1 if g.is_complete() else 3


def exact_tpc(g: Graph, cap: int = DEFAULT_CAP, start: int | None = None, symmetry: bool = True,
              max_nodes: int | None = None, workers: int = 1) -> SolveResult:
    """Smallest k admitting a total-proper-connected total coloring with k colors.

    ``start`` overrides the initial k (default: 1 for complete graphs, else 3).
    ``cap`` bounds n+m; larger instances raise :class:`InfeasibleError`.
    """
    if g.n == 1:
        return SolveResult(1, TotalColoring(g, (1,), {}), 0, 0.0)
    return _solve(g, "tpc", cap, tpc_lower_bound(g) if start is None else start,
                  symmetry, max_nodes, workers)


def exact_pc(g: Graph, cap: int = DEFAULT_CAP, start: int | None = None, symmetry: bool = True,
             max_nodes: int | None = None, workers: int = 1) -> SolveResult:
    """Proper connection number: edge colors only, checked in pc mode."""
    if g.n == 1:
        return SolveResult(0, TotalColoring(g, (1,), {}), 0, 0.0)
    lb = 1 if g.is_complete() else 2
    return _solve(g, "pc", cap, lb if start is None else start, symmetry, max_nodes, workers)


def exact_pvc(g: Graph) -> SolveResult:
    """Closed form: 0 if complete, 1 if diameter 2, else 2 (BFS-depth parity coloring)."""
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    t0 = time.perf_counter()
    edges = {e: 1 for e in g.edges}
    if g.is_complete():
        value, vc = 0, (1,) * g.n
    elif diameter(g) == 2:
        value, vc = 1, (1,) * g.n
    else:
        value = 2
        depth = g.bfs_distances(0)
        vc = tuple(1 + int(d) % 2 for d in depth)
    cert = TotalColoring(g, vc, edges)
    report = is_total_proper_connected(g, cert, "pvc")
    if not report.connected:
        raise AssertionError(f"pvc certificate failed at {report.failing_pair}")
    return SolveResult(value, cert, 1, time.perf_counter() - t0)


@dataclass
class Comparison:
    tpc: int
    pc: int
    pvc: int

    @property
    def gap_pc(self) -> int:
        return self.tpc - self.pc

    @property
    def gap_pvc(self) -> int:
        return self.tpc - self.pvc


def compare_numbers(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> Comparison:
    return Comparison(exact_tpc(g, cap, workers=workers).value,
                      exact_pc(g, cap, workers=workers).value,
                      exact_pvc(g).value)
