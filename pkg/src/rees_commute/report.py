"""Analysis reports for one semigroup (or one bare group)."""

from __future__ import annotations

import time
from contextlib import contextmanager
from typing import Any

from .algebra import FiniteGroup, center, is_abelian
from .commuting import commuting_graph, extended_commuting_graph, knit_degree
from .graph import induced_subgraph
from .invariants import (
    INFINITY,
    are_isomorphic,
    chromatic_number,
    clique_number,
    connected_components,
    diameter,
    girth,
)
from .rees import ReesMatrixSemigroup


def _json_distance(d: int | float) -> int | str:
    return "infinity" if d == INFINITY else int(d)


class _Timer:
    def __init__(self):
        self.ms: dict[str, float] = {}

    @contextmanager
    def __call__(self, name: str):
        start = time.perf_counter()
        yield
        self.ms[name] = round((time.perf_counter() - start) * 1000, 3)


def analyze(
    obj: ReesMatrixSemigroup | FiniteGroup,
    echo: dict[str, Any],
    max_path_budget: int | None = None,
    timings: bool = False,
) -> dict[str, Any]:
    """Build the report dict.

    A Rees semigroup with |I| = |Lambda| = 1 is analysed as its group.
    Timings are only included on request so that reports stay byte-stable.
    """
    if isinstance(obj, ReesMatrixSemigroup) and obj.is_group_case:
        obj = obj.group
    group_mode = isinstance(obj, FiniteGroup)
    timer = _Timer()

    with timer("commuting_graph"):
        cg = commuting_graph(obj)
    g = cg.graph
    z = center(obj)
    ext = None if group_mode else extended_commuting_graph(obj.group).graph

    with timer("components"):
        per_component = []
        comps = connected_components(g)
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            entry = {
                "size": len(comp),
                "diameter": _json_distance(diameter(sub)),
                "girth": girth(sub),
                "iso_to_extended_group_graph": None if ext is None else are_isomorphic(sub, ext) is not None,
            }
            per_component.append(entry)

    with timer("clique_number"):
        omega, clique = clique_number(g)
    with timer("chromatic_number"):
        chi, coloring = chromatic_number(g)
    with timer("knit_degree"):
        knit = knit_degree(obj, max(1, g.vertex_count - 1), budget=max_path_budget)

    report: dict[str, Any] = {
        "instance": {**echo, "mode": "group" if group_mode else "rees"},
        "order": obj.order,
        "center_size": len(z),
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "component_count": len(comps),
        "diameter": _json_distance(diameter(g)),
        "girth": girth(g),
        "per_component": per_component,
        "clique_number": {"value": omega, "witness": [g.label(v) for v in clique]},
        "chromatic_number": {
            "value": chi,
            "witness": {g.label(v): c for v, c in enumerate(coloring)},
        },
        "knit_degree": _knit_json(knit, cg),
    }
    if group_mode:
        report["abelian"] = is_abelian(obj)
    if timings:
        report["timings"] = timer.ms
    return report


def _knit_json(knit, cg) -> dict[str, Any]:
    out = knit.to_json()
    if "path" in out:
        out["path"] = [cg.source.labels[x] for x in out["path"]]
    return out


def check_report(report: dict[str, Any], obj: ReesMatrixSemigroup | FiniteGroup) -> list[str]:
    """Re-validate the report's witnesses against a freshly built graph."""
    if isinstance(obj, ReesMatrixSemigroup) and obj.is_group_case:
        obj = obj.group
    g = commuting_graph(obj).graph
    index = {g.label(v): v for v in range(g.vertex_count)}
    problems = []
    clique = [index[lab] for lab in report["clique_number"]["witness"]]
    if len(clique) != report["clique_number"]["value"] or any(
        not g.has_edge(u, w) for k, u in enumerate(clique) for w in clique[k + 1:]
    ):
        problems.append("clique witness invalid")
    colors = report["chromatic_number"]["witness"]
    if any(colors[g.label(u)] == colors[g.label(w)] for u, w in g.edges()):
        problems.append("colouring witness invalid")
    if len(set(colors.values())) != report["chromatic_number"]["value"]:
        problems.append("colouring uses a different number of colours")
    if isinstance(obj, ReesMatrixSemigroup):
        if report["component_count"] != obj.i_size * obj.lambda_size:
            problems.append("component count differs from |I|*|Lambda|")
    return problems


def extended_or_plain(obj: ReesMatrixSemigroup | FiniteGroup, extended: bool):
    if isinstance(obj, ReesMatrixSemigroup) and obj.is_group_case:
        obj = obj.group
    return (extended_commuting_graph if extended else commuting_graph)(obj)
