"""Commuting graphs, extended commuting graphs, left paths and knit degree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal

from .algebra import FiniteGroup, MulSystem, as_system, center
from .errors import CommutativeInput, InputError
from .graph import SimpleGraph, bits
from .invariants import _Meter
from .rees import ReesMatrixSemigroup


@dataclass(frozen=True)
class LabeledCommGraph:
    """A graph whose vertex v stands for element ``elements[v]`` of ``source``."""

    graph: SimpleGraph
    elements: tuple[int, ...]
    source: MulSystem

    def vertex_of(self, element: int) -> int:
        return self.elements.index(element)


def _graph_on(s: MulSystem, elements: tuple[int, ...]) -> LabeledCommGraph:
    t = s.table
    adj = []
    for x in elements:
        m = 0
        for k, y in enumerate(elements):
            if x != y and t[x][y] == t[y][x]:
                m |= 1 << k
        adj.append(m)
    g = SimpleGraph(len(elements), tuple(adj), tuple(s.labels[x] for x in elements))
    return LabeledCommGraph(g, elements, s)


def commuting_graph(s) -> LabeledCommGraph:
    """Vertices are the non-central elements, in increasing order."""
    sys = as_system(s)
    z = set(center(sys))
    if len(z) == sys.order:
        raise CommutativeInput("the commuting graph is only defined for non-commutative input")
    return _graph_on(sys, tuple(x for x in range(sys.order) if x not in z))


def extended_commuting_graph(s) -> LabeledCommGraph:
    sys = as_system(s)
    return _graph_on(sys, tuple(range(sys.order)))


def is_left_path(s, path) -> bool:
    """Check every defining condition of a left path directly."""
    sys = as_system(s)
    t = sys.table
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    z = set(center(sys))
    if any(x in z for x in path):
        return False
    if any(t[a][b] != t[b][a] for a, b in zip(path, path[1:])):
        return False
    first, last = path[0], path[-1]
    return all(t[first][x] == t[last][x] for x in path)


def find_left_path(s, max_length: int, budget: int | None = None) -> tuple[int, ...] | None:
    """Shortest left path of at most ``max_length`` edges, as element indices.

    For a fixed ordered pair of endpoints (a, b), a sequence a = x1, ..., xn = b
    is a left path exactly when it is a path of the commuting graph whose
    every vertex y satisfies a*y = b*y.  So the shortest left path from a to b
    is a shortest path inside the subgraph induced by those y, found by BFS.
    Among shortest ones the lexicographically least vertex sequence is kept.
    """
    if max_length < 1:
        raise InputError("max_length must be at least 1")
    cg = commuting_graph(s)
    g, elems = cg.graph, cg.elements
    t = cg.source.table
    n = g.vertex_count
    meter = _Meter(budget, "find_left_path")
    best: tuple[int, ...] | None = None

    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            meter.tick()
            xa, xb = elems[a], elems[b]
            allowed = 0
            for v in range(n):
                if t[xa][elems[v]] == t[xb][elems[v]]:
                    allowed |= 1 << v
            if not (allowed >> a & 1 and allowed >> b & 1):
                continue
            path = _lex_shortest_path(g, a, b, allowed, meter)
            if path is None or len(path) - 1 > max_length:
                continue
            cand = tuple(elems[v] for v in path)
            if best is None or (len(cand), cand) < (len(best), best):
                best = cand
    return best


def _lex_shortest_path(g: SimpleGraph, a: int, b: int, allowed: int, meter: _Meter) -> list[int] | None:
    # distances to b inside the allowed set, then a greedy walk from a
    dist = {b: 0}
    queue = deque([b])
    while queue:
        u = queue.popleft()
        meter.tick()
        for w in bits(g.adj[u] & allowed):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if a not in dist:
        return None
    path = [a]
    while path[-1] != b:
        here = path[-1]
        path.append(next(w for w in bits(g.adj[here] & allowed) if dist.get(w) == dist[here] - 1))
    return path


KnitStatus = Literal["value", "none_proved", "none_up_to_bound"]


@dataclass(frozen=True)
class KnitDegree:
    status: KnitStatus
    bound: int
    value: int | None = None
    path: tuple[int, ...] | None = None
    basis: str | None = None

    def to_json(self) -> dict:
        out = {"status": self.status, "bound": self.bound}
        if self.value is not None:
            out["value"] = self.value
            out["path"] = list(self.path)
        if self.basis is not None:
            out["basis"] = self.basis
        return out


def knit_degree(s, max_length: int, budget: int | None = None) -> KnitDegree:
    """Length of a shortest left path, or a qualified "none".

    "none" is unconditional for Rees semigroups and groups (no left paths can
    exist there) and when ``max_length`` already covers every simple path.
    Otherwise it only holds up to ``max_length``.
    """
    path = find_left_path(s, max_length, budget)
    if path is not None:
        return KnitDegree("value", max_length, len(path) - 1, path)
    vertices = commuting_graph(s).graph.vertex_count
    if isinstance(s, (ReesMatrixSemigroup, FiniteGroup)):
        return KnitDegree("none_proved", max_length, basis="theorem")
    if max_length >= vertices - 1:
        return KnitDegree("none_proved", max_length, basis="exhaustive")
    return KnitDegree("none_up_to_bound", max_length)
