"""Instance-level checkers for the structure theory of Rees matrix semigroups.

Each checker recomputes a quantity directly (products, graphs, exact
invariants) and compares it with what the structure theory predicts.  A
failing result always carries a witness that can be re-evaluated by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

from .algebra import (
    FiniteGroup,
    MulSystem,
    abelian_subgroups,
    center,
    is_abelian,
    max_abelian_subgroup_size,
)
from .commuting import commuting_graph, extended_commuting_graph, find_left_path
from .errors import InputError, PreconditionViolated
from .graph import induced_subgraph
from .groups import named_group
from .invariants import (
    INFINITY,
    are_isomorphic,
    chromatic_number,
    clique_number,
    connected_components,
    diameter,
    girth,
    is_clique,
    is_isomorphism,
    is_proper_coloring,
    maximal_cliques,
    shortest_cycle,
)
from .rees import (
    ReesMatrixSemigroup,
    SandwichMatrix,
    build_rees,
    commute_by_lemma,
    h_classes,
    identity_sandwich,
    rees_product,
    translate,
)

Verdict = Literal["pass", "fail", "skipped"]

FAULTS = ("flip_entry", "transpose_p")


@dataclass
class CheckResult:
    check_id: str
    instance: str
    verdict: Verdict
    witness: dict[str, Any] | None = None
    metrics: dict[str, Any] = field(default_factory=dict)
    certificate: dict[str, Any] | None = None
    calibration: bool = False
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check_id": self.check_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "metrics": self.metrics,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.calibration:
            out["calibration"] = True
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _result(check_id, instance, ok, witness=None, **kw) -> CheckResult:
    if not ok and witness is None:
        raise AssertionError(f"{check_id}: failing result without witness")
    return CheckResult(check_id, instance, "pass" if ok else "fail", None if ok else witness, **kw)


def describe(s: ReesMatrixSemigroup) -> str:
    rows = ";".join(",".join(s.group.labels[v] for v in row) for row in s.p.entries)
    return f"M(G[{s.group.order}];{s.i_size},{s.lambda_size};P=[{rows}])"


def _require_nonsingleton(s: ReesMatrixSemigroup) -> None:
    if s.is_group_case:
        raise PreconditionViolated("needs |I| > 1 or |Lambda| > 1")


def _labels(s, elements) -> list[str]:
    sys = s if isinstance(s, MulSystem) else s.system
    return [sys.labels[x] for x in elements]


def check_center_empty(s: ReesMatrixSemigroup, instance: str | None = None) -> CheckResult:
    _require_nonsingleton(s)
    z = center(s.system)
    commutative = is_abelian(s.system)
    return _result(
        "center_empty",
        instance or describe(s),
        not z and not commutative,
        {"center": _labels(s, z), "commutative": commutative},
        metrics={"order": s.order, "center_size": len(z)},
    )


def _flip_one_entry(table: list[list[int]]) -> None:
    n = len(table)
    if n < 2:
        raise InputError("fault injection needs at least two elements")
    a, b = 0, 1
    if table[a][b] != table[b][a]:
        table[a][b] = table[b][a]
    else:
        table[a][b] = (table[b][a] + 1) % n


def check_commutation_lemma(
    s: ReesMatrixSemigroup,
    instance: str | None = None,
    fault: str | None = None,
) -> CheckResult:
    """Coordinate rule for commutation vs. comparing the two products, on all pairs."""
    table = [list(row) for row in s.system.table]
    if fault == "flip_entry":
        _flip_one_entry(table)
    elif fault is not None:
        raise InputError(f"fault {fault!r} does not apply to commutation_lemma")
    n = s.order
    for a in range(n):
        ta = s.decode(a)
        for b in range(n):
            by_product = table[a][b] == table[b][a]
            by_lemma = commute_by_lemma(s, ta, s.decode(b))
            if by_product != by_lemma:
                witness = {
                    "pair": _labels(s, (a, b)),
                    "triples": [list(ta), list(s.decode(b))],
                    "products": _labels(s, (table[a][b], table[b][a])),
                    "lemma_says_commute": by_lemma,
                    "products_commute": by_product,
                }
                return _result("commutation_lemma", instance or describe(s), False, witness,
                               metrics={"pairs": n * n})
    return _result("commutation_lemma", instance or describe(s), True, metrics={"pairs": n * n})


def check_translation_lemma(
    s: ReesMatrixSemigroup,
    instance: str | None = None,
    fault: str | None = None,
) -> CheckResult:
    """x, y commute in G iff their translates into each H-class commute in S."""
    lookup = None
    if fault == "transpose_p":
        p = s.p.entries
        lookup = lambda lam, i: p[i % s.p.rows][lam % s.p.cols]  # noqa: E731
    elif fault is not None:
        raise InputError(f"fault {fault!r} does not apply to translation_lemma")
    g = s.group
    cases = 0
    for i in range(s.i_size):
        for lam in range(s.lambda_size):
            for x in range(g.order):
                a = translate(s, i, lam, x, lookup)
                for y in range(g.order):
                    b = translate(s, i, lam, y, lookup)
                    cases += 1
                    in_group = g.mul(x, y) == g.mul(y, x)
                    in_s = rees_product(s, a, b) == rees_product(s, b, a)
                    if in_group != in_s:
                        witness = {
                            "i": i, "lambda": lam,
                            "x": g.labels[x], "y": g.labels[y],
                            "translates": [s.label(a), s.label(b)],
                            "commute_in_group": in_group,
                            "commute_in_semigroup": in_s,
                        }
                        return _result("translation_lemma", instance or describe(s), False, witness,
                                       metrics={"cases": cases})
    return _result("translation_lemma", instance or describe(s), True, metrics={"cases": cases})


def expected_component_diameter(g: FiniteGroup) -> int:
    if g.order == 1:
        return 0
    return 1 if is_abelian(g) else 2


def check_component_structure(s: ReesMatrixSemigroup, instance: str | None = None) -> CheckResult:
    """Components of G(S) are the H-classes, each a copy of G*(G) with the right diameter.

    The copy is certified twice: by the explicit translate map and by an
    independent isomorphism search.
    """
    _require_nonsingleton(s)
    cg = commuting_graph(s)
    comps = [tuple(cg.elements[v] for v in c) for c in connected_components(cg.graph)]
    blocks = h_classes(s)
    ext = extended_commuting_graph(s.group).graph
    want_diam = expected_component_diameter(s.group)
    failures: list[dict[str, Any]] = []

    if len(comps) != s.i_size * s.lambda_size:
        failures.append({"condition": "component_count", "computed": len(comps),
                         "expected": s.i_size * s.lambda_size})
    if sorted(comps) != sorted(blocks):
        failures.append({"condition": "components_are_h_classes",
                         "components": [_labels(s, c) for c in comps]})

    maps = []
    for k, block in enumerate(blocks):
        i, lam = divmod(k, s.lambda_size)
        sub, back = induced_subgraph(cg.graph, [cg.vertex_of(e) for e in block])
        pos = {cg.elements[v]: j for j, v in enumerate(back)}
        phi = [pos[s.encode(translate(s, i, lam, x))] for x in range(s.group.order)]
        if not is_isomorphism(ext, sub, phi):
            failures.append({"condition": "translate_map_isomorphism", "i": i, "lambda": lam})
        if are_isomorphic(sub, ext) is None:
            failures.append({"condition": "isomorphic_to_extended_group_graph", "i": i, "lambda": lam})
        hub = phi[s.group.identity]
        if sub.degree(hub) != sub.vertex_count - 1:
            failures.append({"condition": "identity_translate_is_universal", "i": i, "lambda": lam,
                             "vertex": s.label(translate(s, i, lam, s.group.identity))})
        maps.append({"i": i, "lambda": lam, "hub": sub.label(hub),
                     "translate": [sub.label(v) for v in phi]})
        d = diameter(sub)
        if d != want_diam:
            failures.append({"condition": "diameter", "i": i, "lambda": lam,
                             "computed": "infinity" if d == INFINITY else d, "expected": want_diam})

    metrics = {
        "component_count": len(comps),
        "expected_count": s.i_size * s.lambda_size,
        "component_diameter": want_diam if not failures else None,
    }
    res = _result("component_structure", instance or describe(s), not failures,
                  {"failures": failures}, metrics=metrics)
    if not failures:
        res.certificate = {"components": maps}
    return res


def check_matrix_independence(
    group: FiniteGroup,
    i_size: int,
    lambda_size: int,
    p1: SandwichMatrix,
    p2: SandwichMatrix,
    instance: str | None = None,
) -> CheckResult:
    if i_size == 1 and lambda_size == 1:
        raise PreconditionViolated("needs |I| > 1 or |Lambda| > 1")
    s1 = build_rees(group, i_size, lambda_size, p1)
    s2 = build_rees(group, i_size, lambda_size, p2)
    g1, g2 = commuting_graph(s1).graph, commuting_graph(s2).graph
    iso = are_isomorphic(g1, g2)
    ok = iso is not None and is_isomorphism(g1, g2, iso)
    witness = {"vertices": [g1.vertex_count, g2.vertex_count], "edges": [g1.edge_count, g2.edge_count]}
    res = _result("matrix_independence", instance or describe(s1), ok, witness,
                  metrics={"vertices": g1.vertex_count, "edges": g1.edge_count})
    if ok:
        res.certificate = {"mapping": list(iso)}
    return res


def _closed(s: MulSystem, members: tuple[int, ...]) -> bool:
    ms = set(members)
    return all(s.table[a][b] in ms for a in members for b in members)


def check_max_commutative(s: ReesMatrixSemigroup, instance: str | None = None) -> CheckResult:
    """Largest commutative subsemigroups vs. translated maximum abelian subgroups.

    Every maximal clique of the extended commuting graph is itself a
    commutative subsemigroup (the subsemigroup it generates is still a clique),
    so the maximum ones are found among the product-closed maximal cliques.
    """
    ext = extended_commuting_graph(s)
    cliques = [tuple(ext.elements[v] for v in c) for c in maximal_cliques(ext.graph)]
    closed = [c for c in cliques if _closed(s.system, c)]
    top = max(len(c) for c in closed)
    found = {frozenset(c) for c in closed if len(c) == top}

    g = s.group
    best = max_abelian_subgroup_size(g)
    hs = [h for h in abelian_subgroups(g, maximal_only=True) if len(h) == best]
    predicted = {
        frozenset(s.encode(translate(s, i, lam, x)) for x in h)
        for h in hs
        for i in range(s.i_size)
        for lam in range(s.lambda_size)
    }
    ok = top == best and found == predicted
    witness = {
        "computed_max": top,
        "max_abelian_subgroup_size": best,
        "unexpected": sorted(_labels(s, sorted(c)) for c in found - predicted),
        "missing": sorted(_labels(s, sorted(c)) for c in predicted - found),
    }
    res = _result("max_commutative", instance or describe(s), ok, witness,
                  metrics={"max_size": top, "family_size": len(found),
                           "unclosed_maximal_cliques": len(cliques) - len(closed)})
    if ok:
        res.certificate = {"family": sorted(_labels(s, sorted(c)) for c in found)}
    return res


def _group_graph_value(g: FiniteGroup, which: str) -> int:
    graph = commuting_graph(g).graph
    return (clique_number if which == "clique" else chromatic_number)(graph)[0]


def check_clique_number(s: ReesMatrixSemigroup, instance: str | None = None) -> CheckResult:
    _require_nonsingleton(s)
    graph = commuting_graph(s).graph
    omega, wit = clique_number(graph)
    g = s.group
    if is_abelian(g):
        expected = g.order
    else:
        expected = len(center(g)) + _group_graph_value(g, "clique")
    ok = omega == expected and is_clique(graph, wit)
    res = _result("clique_number", instance or describe(s), ok,
                  {"computed": omega, "expected": expected, "clique": [graph.label(v) for v in wit]},
                  metrics={"clique_number": omega, "expected": expected})
    if ok:
        res.certificate = {"clique": [graph.label(v) for v in wit]}
    return res


def check_chromatic_number(s: ReesMatrixSemigroup, instance: str | None = None) -> CheckResult:
    _require_nonsingleton(s)
    graph = commuting_graph(s).graph
    chi, coloring = chromatic_number(graph)
    g = s.group
    if is_abelian(g):
        expected = g.order
    else:
        expected = len(center(g)) + _group_graph_value(g, "chromatic")
    ok = chi == expected and is_proper_coloring(graph, coloring) and max(coloring) + 1 == chi
    res = _result("chromatic_number", instance or describe(s), ok,
                  {"computed": chi, "expected": expected, "coloring": list(coloring)},
                  metrics={"chromatic_number": chi, "expected": expected})
    if ok:
        res.certificate = {"coloring": list(coloring)}
    return res


def check_girth(obj: ReesMatrixSemigroup | FiniteGroup, instance: str | None = None) -> CheckResult:
    """Rees case: acyclic iff |G| <= 2, otherwise girth 3.  Group case: acyclic or girth 3."""
    graph = commuting_graph(obj).graph
    cycle = shortest_cycle(graph)
    value = None if cycle is None else len(cycle)
    if isinstance(obj, ReesMatrixSemigroup) and not obj.is_group_case:
        expected = None if obj.group.order <= 2 else 3
        ok = value == expected
        name = instance or describe(obj)
        metrics = {"girth": value, "expected": expected}
    else:
        ok = value in (None, 3)
        name = instance or f"G[{obj.order}]"
        metrics = {"girth": value}
    cyc_labels = None if cycle is None else [graph.label(v) for v in cycle]
    res = _result("girth", name, ok, {"girth": value, "cycle": cyc_labels}, metrics=metrics)
    if ok and cycle is not None:
        res.certificate = {"cycle": cyc_labels}
    return res


def check_no_left_paths(obj, instance: str | None = None, budget: int | None = None) -> CheckResult:
    """Exhaustive left-path search: every simple path has fewer edges than vertices.

    For inputs that are neither Rees semigroups nor groups the result is
    marked as calibration: finding a path there is the detector working.
    """
    graph = commuting_graph(obj).graph
    bound = max(1, graph.vertex_count - 1)
    path = find_left_path(obj, bound, budget)
    calibration = not isinstance(obj, (ReesMatrixSemigroup, FiniteGroup))
    if instance is None:
        instance = describe(obj) if isinstance(obj, ReesMatrixSemigroup) else f"S[{obj.order}]"
    witness = None if path is None else {"left_path": _labels(obj, path), "length": len(path) - 1}
    return _result("no_left_paths", instance, path is None, witness,
                   metrics={"bound": bound, "vertices": graph.vertex_count},
                   calibration=calibration)


def check_attainability(n: int) -> CheckResult:
    """M(C_n; 2, 1; P) has clique number and chromatic number both n."""
    if n < 1:
        raise InputError("n must be at least 1")
    g = named_group(f"C{n}")
    s = build_rees(g, 2, 1, identity_sandwich(g, 2, 1))
    graph = commuting_graph(s).graph
    omega, clique = clique_number(graph)
    chi, coloring = chromatic_number(graph)
    ok = (
        omega == n
        and chi == n
        and is_clique(graph, clique)
        and is_proper_coloring(graph, coloring)
        and max(coloring) + 1 == chi
    )
    res = _result("attainability", f"M(C{n};2,1;P=identity)", ok,
                  {"clique_number": omega, "chromatic_number": chi, "n": n},
                  metrics={"n": n, "clique_number": omega, "chromatic_number": chi,
                           "girth": girth(graph)})
    if ok:
        res.certificate = {"clique": [graph.label(v) for v in clique], "coloring": list(coloring)}
    return res
