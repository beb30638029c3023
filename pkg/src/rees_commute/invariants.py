"""Exact graph invariants with checkable witnesses.

All searches take a cooperative ``budget`` (number of search nodes); running
out raises ``BudgetExceeded`` instead of returning a guess.  When no budget is
passed, ``REES_COMMUTE_BUDGET`` from the environment is used, else 10**7.
"""

from __future__ import annotations

import math
import os
from collections import deque
from typing import Sequence

from .errors import BudgetExceeded, EmptyGraph, OutputBudgetExceeded, SizeLimitExceeded
from .graph import SimpleGraph, bits, induced_subgraph

INFINITY = math.inf
DEFAULT_BUDGET = 10**7

CLIQUE_CAP = 256
CHROMATIC_CAP = 128
ISO_CAP = 64
MAX_CLIQUE_OUTPUT = 10**6


def default_budget() -> int:
    raw = os.environ.get("REES_COMMUTE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class _Meter:
    def __init__(self, budget: int | None, what: str):
        self.left = default_budget() if budget is None else budget
        self.what = what

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(f"{self.what}: search budget exhausted")


def popcount(m: int) -> int:
    return bin(m).count("1")


def connected_components(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.vertex_count):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(bits(comp)))
    return out


def bfs_distances(g: SimpleGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u]):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: SimpleGraph) -> int | float:
    """Largest distance between two vertices; ``INFINITY`` if disconnected."""
    if g.vertex_count == 0:
        raise EmptyGraph("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.vertex_count):
        dist = bfs_distances(g, v)
        if any(d is None for d in dist):
            return INFINITY
        best = max(best, max(dist))
    return best


def clique_number(
    g: SimpleGraph,
    max_vertices: int = CLIQUE_CAP,
    budget: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Maximum clique size and the lexicographically least maximum clique.

    Branch and bound over increasing vertex sequences: cliques are visited in
    lexicographic order and a branch is cut only when it cannot beat the
    incumbent, so the first maximum clique reached is the least one.
    """
    n = g.vertex_count
    if n == 0:
        raise EmptyGraph("clique number of the empty graph is undefined")
    if n > max_vertices:
        raise SizeLimitExceeded(f"{n} vertices exceeds clique cap {max_vertices}")
    meter = _Meter(budget, "clique_number")
    adj = g.adj
    best: tuple[int, ...] = ()

    def expand(r: list[int], cand: int) -> None:
        nonlocal best
        meter.tick()
        if len(r) > len(best):
            best = tuple(r)
        while cand:
            if len(r) + popcount(cand) <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            r.append(v)
            expand(r, cand & adj[v])
            r.pop()

    expand([], (1 << n) - 1)
    return len(best), best


def maximal_cliques(
    g: SimpleGraph,
    max_output: int = MAX_CLIQUE_OUTPUT,
) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            if len(out) >= max_output:
                raise OutputBudgetExceeded(f"more than {max_output} maximal cliques")
            out.append(tuple(bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: (popcount(p & adj[u]), -u))
        for v in bits(p & ~adj[pivot]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.vertex_count:
        bk(0, (1 << g.vertex_count) - 1, 0)
    out.sort()
    return out


def shortest_cycle(g: SimpleGraph) -> tuple[int, ...] | None:
    """Vertices of a shortest cycle in traversal order, or None for a forest."""
    best: tuple[int, ...] | None = None
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= len(best):
                break
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u] and parent[w] != u:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < len(best):
                        best = _close_cycle(parent, u, w)
    return best


def _close_cycle(parent: dict[int, int], u: int, w: int) -> tuple[int, ...]:
    def to_root(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        return path

    pu, pw = to_root(u), to_root(w)
    cycle = pu[::-1] + pw[:-1]
    return tuple(cycle)


def girth(g: SimpleGraph) -> int | None:
    cyc = shortest_cycle(g)
    return None if cyc is None else len(cyc)


def is_proper_coloring(g: SimpleGraph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.vertex_count and all(
        coloring[u] != coloring[w] for u, w in g.edges()
    )


def _lex_coloring(g: SimpleGraph, k: int, meter: _Meter) -> tuple[int, ...] | None:
    """Lexicographically least proper colouring with colours < k, if any.

    Colours are tried in increasing order along increasing vertices, never
    opening a colour beyond the next unused one (that restriction keeps the
    least colouring reachable).  Forward checking prunes dead branches.
    """
    n = g.vertex_count
    colors = [-1] * n
    forbidden = [0] * n  # bitmask of colours used by coloured neighbours
    full = (1 << k) - 1

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        meter.tick()
        for c in range(min(k, used + 1)):
            if forbidden[v] >> c & 1:
                continue
            touched = []
            dead = False
            for u in bits(g.adj[v]):
                if u > v and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
                    if forbidden[u] == full:
                        dead = True
            colors[v] = c
            if not dead and place(v + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            colors[v] = -1
        return False

    return tuple(colors) if place(0, 0) else None


def _greedy_colors(g: SimpleGraph) -> int:
    colors: list[int] = [-1] * g.vertex_count
    for v in range(g.vertex_count):
        taken = {colors[u] for u in bits(g.adj[v])}
        colors[v] = next(c for c in range(g.vertex_count) if c not in taken)
    return max(colors) + 1


def chromatic_number(
    g: SimpleGraph,
    max_vertices: int = CHROMATIC_CAP,
    budget: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number and the lexicographically least optimal colouring.

    Each component is solved separately, searching k upward from its clique
    number; the greedy colouring bounds the search from above.
    """
    n = g.vertex_count
    if n == 0:
        raise EmptyGraph("chromatic number of the empty graph is undefined")
    if n > max_vertices:
        raise SizeLimitExceeded(f"{n} vertices exceeds chromatic cap {max_vertices}")
    meter = _Meter(budget, "chromatic_number")
    parts = [induced_subgraph(g, comp) for comp in connected_components(g)]
    chi = 1
    for sub, _ in parts:
        lower = clique_number(sub, budget=meter.left)[0]
        upper = _greedy_colors(sub)
        k = max(lower, chi)
        while k < upper and _lex_coloring(sub, k, meter) is None:
            k += 1
        chi = max(chi, k)
    coloring = [0] * n
    for sub, back in parts:
        local = _lex_coloring(sub, chi, meter)
        assert local is not None
        for v, c in zip(back, local):
            coloring[v] = c
    return chi, tuple(coloring)


def _refine(g: SimpleGraph, h: SimpleGraph) -> tuple[list[int], list[int]]:
    """Colour refinement run on both graphs at once so colours are comparable."""
    graphs = (g, h)
    colors = [[gr.degree(v) for v in range(gr.vertex_count)] for gr in graphs]
    classes = -1
    while True:
        sigs = [
            [(col[v], tuple(sorted(col[u] for u in bits(gr.adj[v])))) for v in range(gr.vertex_count)]
            for gr, col in zip(graphs, colors)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs[0]) | set(sigs[1])))}
        colors = [[palette[s] for s in side] for side in sigs]
        if len(palette) == classes:
            return colors[0], colors[1]
        classes = len(palette)


def are_isomorphic(
    g: SimpleGraph,
    h: SimpleGraph,
    max_vertices: int = ISO_CAP,
    budget: int | None = None,
) -> tuple[int, ...] | None:
    """An isomorphism g -> h as a tuple (``mapping[v]`` is the image of v), or None.

    Backtracking over colour-refined candidate classes.  The g-vertices are
    placed most-constrained first, candidates are tried in increasing order.
    """
    n = g.vertex_count
    if n != h.vertex_count or g.edge_count != h.edge_count:
        return None
    if max(n, h.vertex_count) > max_vertices:
        raise SizeLimitExceeded(f"{n} vertices exceeds isomorphism cap {max_vertices}")
    if sorted(map(g.degree, range(n))) != sorted(map(h.degree, range(n))):
        return None
    cg, ch = _refine(g, h)
    if sorted(cg) != sorted(ch):
        return None
    class_mask: dict[int, int] = {}
    for w, c in enumerate(ch):
        class_mask[c] = class_mask.get(c, 0) | 1 << w
    class_size = {c: popcount(m) for c, m in class_mask.items()}

    order: list[int] = []
    placed = 0
    for _ in range(n):
        v = max(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: (popcount(g.adj[v] & placed), -class_size[cg[v]], -v),
        )
        order.append(v)
        placed |= 1 << v

    meter = _Meter(budget, "are_isomorphic")
    mapping = [-1] * n

    def extend(k: int, used: int) -> bool:
        if k == n:
            return True
        meter.tick()
        v = order[k]
        cand = class_mask[cg[v]] & ~used
        for u in order[:k]:
            if g.adj[v] >> u & 1:
                cand &= h.adj[mapping[u]]
            else:
                cand &= ~h.adj[mapping[u]]
        for w in bits(cand):
            mapping[v] = w
            if extend(k + 1, used | 1 << w):
                return True
        mapping[v] = -1
        return False

    if not extend(0, 0):
        return None
    return tuple(mapping)


def is_isomorphism(g: SimpleGraph, h: SimpleGraph, mapping: Sequence[int]) -> bool:
    n = g.vertex_count
    if n != h.vertex_count or sorted(mapping) != list(range(n)):
        return False
    return all(
        g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])
        for u in range(n)
        for v in range(u + 1, n)
    )


def is_clique(g: SimpleGraph, vertices: Sequence[int]) -> bool:
    return all(g.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])
