"""Simple undirected graphs on vertices ``0 .. n-1``.

Adjacency is held as one bitmask per vertex, which keeps the clique,
colouring and isomorphism searches cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateLabel, IndexOutOfRange, InputError


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.vertex_count:
            raise InputError("adjacency length does not match vertex count")
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            if m >> self.vertex_count:
                raise IndexOutOfRange(f"vertex {v} has a neighbour out of range")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None:
            if len(self.labels) != self.vertex_count:
                raise InputError("label count does not match vertex count")
            if len(set(self.labels)) != len(self.labels):
                raise DuplicateLabel("vertex labels must be distinct")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> SimpleGraph:
        adj = [0] * n
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise IndexOutOfRange(f"edge ({u}, {w}) out of range for {n} vertices")
            if u == w:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << w
            adj[w] |= 1 << u
        return cls(n, tuple(adj), None if labels is None else tuple(labels))

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.adj[u] >> w & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.vertex_count) for w in bits(self.adj[u]) if u < w]

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def complete_graph(n: int) -> SimpleGraph:
    full = (1 << n) - 1
    return SimpleGraph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    adj, offset = [], 0
    for g in graphs:
        adj.extend(m << offset for m in g.adj)
        offset += g.vertex_count
    return SimpleGraph(offset, tuple(adj))


def graph_join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Disjoint union of g and h plus every edge between them.

    Vertices of g keep their numbers; vertex v of h becomes ``g.vertex_count + v``.
    """
    n, m = g.vertex_count, h.vertex_count
    all_h = ((1 << m) - 1) << n
    adj = [a | all_h for a in g.adj] + [(a << n) | ((1 << n) - 1) for a in h.adj]
    return SimpleGraph(n + m, tuple(adj))


def induced_subgraph(g: SimpleGraph, subset: Iterable[int]) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Subgraph induced by ``subset``, renumbered in increasing order.

    Returns the graph and the back-mapping: new vertex k is old vertex ``back[k]``.
    """
    back = tuple(sorted(set(subset)))
    for v in back:
        if not 0 <= v < g.vertex_count:
            raise IndexOutOfRange(f"vertex {v} not in graph")
    pos = {v: k for k, v in enumerate(back)}
    adj = []
    for v in back:
        m = 0
        for u in bits(g.adj[v]):
            if u in pos:
                m |= 1 << pos[u]
        adj.append(m)
    labels = None if g.labels is None else tuple(g.labels[v] for v in back)
    return SimpleGraph(len(back), tuple(adj), labels), back
