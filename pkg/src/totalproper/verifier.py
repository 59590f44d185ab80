"""Total proper connectivity checks, pc/pvc variants, and the strong two-path property.

Paths are searched exactly by DFS over simple paths. Before the DFS, a BFS over
the *walk* state graph (states are directed edges, transitions obey the local
path conditions) is run per source. A target unreachable by a proper walk has
no proper path either, and a shortest proper walk that happens to be simple is
already a witness; the DFS only runs when neither shortcut decides the pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .coloring import PathWitness, TotalColoring, is_total_proper_path, path_endpoints_colors
from .graph import Graph, GraphError

MODES = ("tpc", "pc", "pvc")


class VerificationError(RuntimeError):
    pass


@dataclass
class VerificationReport:
    connected: bool
    witnesses: dict[tuple[int, int], PathWitness] = field(default_factory=dict)
    failing_pair: tuple[int, int] | None = None
    pairs_checked: int = 0


@dataclass
class StrongReport:
    holds: bool
    certificates: dict[tuple[int, int], tuple[PathWitness, PathWitness]] = field(default_factory=dict)
    failing_pair: tuple[int, int] | None = None

    def __bool__(self):
        return self.holds


class PathEngine:
    """Precomputed lookups for one (graph, coloring, mode) triple."""

    def __init__(self, g: Graph, c: TotalColoring, mode: str = "tpc"):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.g = g
        self.mode = mode
        self.adj = g.adj
        self.vc = list(c.vertex_colors)
        self.ec = c.edge_matrix()
        self.check_edges = mode in ("tpc", "pc")
        self.check_vertices = mode in ("tpc", "pvc")
        self.check_mixed = mode == "tpc"

    def ok(self, a: int, b: int, c: int, source: int) -> bool:
        """May a path continue a -> b -> c, with b internal?"""
        ec, vc = self.ec, self.vc
        if self.check_edges and ec[a][b] == ec[b][c]:
            return False
        if self.check_mixed:
            cb = vc[b]
            if cb == ec[a][b] or cb == ec[b][c]:
                return False
        if self.check_vertices and a != source and vc[a] == vc[b]:
            return False
        return True

    def walk_tree(self, s: int):
        """BFS over proper-walk states from ``s``; returns the parent map of states."""
        adj = self.adj
        parent = {}
        queue = deque()
        for b in adj[s]:
            parent[(s, b)] = None
            queue.append((s, b))
        ok = self.ok
        while queue:
            a, b = st = queue.popleft()
            for c in adj[b]:
                if c == a or (b, c) in parent:
                    continue
                if ok(a, b, c, s):
                    parent[(b, c)] = st
                    queue.append((b, c))
        return parent

    @staticmethod
    def walk_to(parent, t: int) -> list[int] | None:
        best = None
        for (a, b) in parent:
            if b == t:
                best = (a, b)
                break
        if best is None:
            return None
        seq = [best[1]]
        st = best
        while st is not None:
            seq.append(st[0])
            st = parent[st]
        return seq[::-1]

    def reverse_reach(self, s: int, t: int) -> set[tuple[int, int]]:
        """States (a, b) from which ``t`` can be reached by a proper walk."""
        adj = self.adj
        good = set()
        queue = deque()
        for a in adj[t]:
            good.add((a, t))
            queue.append((a, t))
        ok = self.ok
        while queue:
            b, c = queue.popleft()
            if b == t:
                continue
            for a in adj[b]:
                if a == c or (a, b) in good:
                    continue
                if ok(a, b, c, s):
                    good.add((a, b))
                    queue.append((a, b))
        return good

    def dfs_path(self, s: int, t: int) -> PathWitness | None:
        adj, ok = self.adj, self.ok
        useful = self.reverse_reach(s, t)
        on = [False] * self.g.n
        on[s] = True
        path = [s]

        def rec(a: int, b: int) -> bool:
            for c in adj[b]:
                if on[c] or (b, c) not in useful or not ok(a, b, c, s):
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
            if (s, b) not in useful:
                continue
            path.append(b)
            if b == t:
                return tuple(path)
            on[b] = True
            if rec(s, b):
                return tuple(path)
            on[b] = False
            path.pop()
        return None

    def find_path(self, s: int, t: int, tree=None) -> PathWitness | None:
        if tree is None:
            tree = self.walk_tree(s)
        walk = self.walk_to(tree, t)
        if walk is None:
            return None
        if len(set(walk)) == len(walk):
            return tuple(walk)
        return self.dfs_path(s, t)

    def all_paths(self, s: int, t: int) -> Iterable[PathWitness]:
        """Every proper simple s-t path, in DFS order."""
        adj, ok = self.adj, self.ok
        useful = self.reverse_reach(s, t)
        on = [False] * self.g.n
        on[s] = True
        path = [s]

        def rec(a, b):
            for c in adj[b]:
                if on[c] or (b, c) not in useful or not ok(a, b, c, s):
                    continue
                if c == t:
                    yield (*path, c)
                    continue
                on[c] = True
                path.append(c)
                yield from rec(b, c)
                path.pop()
                on[c] = False

        for b in adj[s]:
            if (s, b) not in useful:
                continue
            if b == t:
                yield (s, t)
                continue
            on[b] = True
            path.append(b)
            yield from rec(s, b)
            path.pop()
            on[b] = False

    def failing_pairs(self, limit: int | None = None) -> list[tuple[int, int]]:
        out = []
        for s in range(self.g.n):
            tree = self.walk_tree(s)
            reached = {b for (_, b) in tree}
            for t in range(s + 1, self.g.n):
                if t not in reached or self.find_path(s, t, tree) is None:
                    out.append((s, t))
                    if limit is not None and len(out) >= limit:
                        return out
        return out


def _require_connected(g: Graph):
    if not g.is_connected():
        raise GraphError("graph is disconnected")


def exists_total_proper_path(g: Graph, c: TotalColoring, u: int, v: int,
                             mode: str = "tpc") -> PathWitness | None:
    if u == v:
        raise VerificationError("endpoints must differ")
    return PathEngine(g, c, mode).find_path(u, v)


def is_total_proper_connected(g: Graph, c: TotalColoring, mode: str = "tpc",
                              stop_at_failure: bool = True) -> VerificationReport:
    _require_connected(g)
    eng = PathEngine(g, c, mode)
    report = VerificationReport(connected=True)
    for s in range(g.n):
        tree = eng.walk_tree(s)
        for t in range(s + 1, g.n):
            report.pairs_checked += 1
            p = eng.find_path(s, t, tree)
            if p is None:
                if report.failing_pair is None:
                    report.failing_pair = (s, t)
                report.connected = False
                if stop_at_failure:
                    report.witnesses.clear()
                    return report
            elif report.connected:
                report.witnesses[(s, t)] = p
    if not report.connected:
        report.witnesses.clear()
    return report


def count_failing_pairs(g: Graph, c: TotalColoring, mode: str = "tpc") -> int:
    return len(PathEngine(g, c, mode).failing_pairs())


def strong_pair(eng: PathEngine, u: int, v: int, path_cap: int | None = None):
    """Two total proper u-v paths meeting the strong conditions, or None."""
    vc, ec = eng.vc, eng.ec
    cu, cv = vc[u], vc[v]
    found: dict[tuple[int, int], PathWitness] = {}
    count = 0
    for p in eng.all_paths(u, v):
        count += 1
        if path_cap is not None and count > path_cap:
            raise VerificationError(f"path cap {path_cap} exceeded for pair {(u, v)}")
        if len(p) == 2:
            se = ee = ec[u][v]
            sv, ev = cv, cu
        else:
            se, ee, sv, ev = ec[u][p[1]], ec[p[-2]][v], vc[p[1]], vc[p[-2]]
        if sv == cu or ev == cv or se == cu or ee == cv:
            continue
        sig = (se, ee)
        if sig in found:
            continue
        for (s2, e2), q in found.items():
            if s2 != se and e2 != ee:
                return q, p
        found[sig] = p
    return None


def has_strong_property(g: Graph, c: TotalColoring, pairs=None,
                        path_cap: int | None = None) -> StrongReport:
    _require_connected(g)
    eng = PathEngine(g, c, "tpc")
    report = StrongReport(holds=True)
    todo = combinations(range(g.n), 2) if pairs is None else pairs
    for u, v in todo:
        got = strong_pair(eng, u, v, path_cap)
        if got is None:
            report.holds = False
            report.failing_pair = (u, v)
            return report
        report.certificates[(u, v)] = got
    return report


def check_strong_certificate(c: TotalColoring, u: int, v: int, p1, p2) -> bool:
    """Independent re-check of one strong-property certificate."""
    g = c.graph
    if p1 == p2 or not (is_total_proper_path(g, c, p1) and is_total_proper_path(g, c, p2)):
        return False
    if p1[0] != u or p2[0] != u or p1[-1] != v or p2[-1] != v:
        return False
    s1, e1, sv1, ev1 = path_endpoints_colors(c, p1)
    s2, e2, sv2, ev2 = path_endpoints_colors(c, p2)
    cu, cv = c.vertex(u), c.vertex(v)
    if cu in (sv1, sv2) or cv in (ev1, ev2):
        return False
    return len({cu, s1, s2}) == 3 and len({cv, e1, e2}) == 3


class WalkBatch:
    """Vectorised proper-walk reachability for many colorings of one graph at once.

    Colorings are rows of an int array in element order (vertices ``0..n-1`` then
    edges in lexicographic order). Unreachability by walks is a sound certificate
    that no proper path exists.
    """

    def __init__(self, g: Graph, mode: str = "tpc"):
        self.g = g
        self.mode = mode
        self.eidx = {e: g.n + i for i, e in enumerate(g.edge_list)}
        self.states = [(a, b) for a in range(g.n) for b in g.adj[a]]
        self.sidx = {st: i for i, st in enumerate(self.states)}

    def _col(self, a, b):
        return self.eidx[(a, b) if a < b else (b, a)]

    def reachable(self, colors: np.ndarray, s: int) -> np.ndarray:
        """Boolean ``(B, n)``: target reachable from ``s`` by a proper walk."""
        g, mode = self.g, self.mode
        B = colors.shape[0]
        S = len(self.states)
        src, dst, valid = [], [], []
        for i, (a, b) in enumerate(self.states):
            for c in g.adj[b]:
                if c == a:
                    continue
                ab, bc = colors[:, self._col(a, b)], colors[:, self._col(b, c)]
                ok = np.ones(B, dtype=bool)
                if mode in ("tpc", "pc"):
                    ok &= ab != bc
                if mode == "tpc":
                    ok &= (colors[:, b] != ab) & (colors[:, b] != bc)
                if mode in ("tpc", "pvc") and a != s:
                    ok &= colors[:, a] != colors[:, b]
                src.append(i)
                dst.append(self.sidx[(b, c)])
                valid.append(ok)
        valid_m = np.stack(valid, axis=1) if valid else np.zeros((B, 0), dtype=bool)
        src_a = np.array(src, dtype=np.intp)
        incoming = [[] for _ in range(S)]
        for t, j in enumerate(dst):
            incoming[j].append(t)
        width = max((len(x) for x in incoming), default=0)
        pad = np.full((S, max(width, 1)), len(src), dtype=np.intp)
        for j, lst in enumerate(incoming):
            pad[j, :len(lst)] = lst
        reach = np.zeros((B, S), dtype=bool)
        for b in g.adj[s]:
            reach[:, self.sidx[(s, b)]] = True
        while True:
            contrib = reach[:, src_a] & valid_m
            contrib = np.concatenate([contrib, np.zeros((B, 1), dtype=bool)], axis=1)
            new = reach | contrib[:, pad].any(axis=2)
            if np.array_equal(new, reach):
                break
            reach = new
        out = np.zeros((B, g.n), dtype=bool)
        for i, (_, b) in enumerate(self.states):
            out[:, b] |= reach[:, i]
        out[:, s] = True
        return out


def has_crossing_proper_arcs(c: TotalColoring) -> bool:
    """On a cycle ``v1..vn`` (vertex ``i-1`` is ``v_i``), look for indices
    ``i < j < k < l`` with ``|i-l| > 1`` and ``|k-j| > 1`` such that the forward arcs
    ``v_j .. v_i`` and ``v_l .. v_k`` (both wrapping past ``v_n``) are total proper."""
    g = c.graph
    n = g.n

    def arc(a, b):  # forward from v_a to v_b, 1-based
        seq = []
        x = a
        while True:
            seq.append(x - 1)
            if x == b:
                return seq
            x = x % n + 1

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not is_total_proper_path(g, c, arc(j, i)):
                continue
            for k in range(j + 1, n + 1):
                if abs(k - j) <= 1:
                    continue
                for l in range(k + 1, n + 1):
                    if abs(i - l) <= 1:
                        continue
                    if is_total_proper_path(g, c, arc(l, k)):
                        return True
    return False
