"""Decide whether a graph is the commuting graph of a completely simple semigroup.

A graph qualifies exactly when it is the commuting graph of a group, or it has
at least two components, all isomorphic to the extended commuting graph of
one group G (then M(G; 1, m; P) realizes it).  Both conditions are searched in
a finite group catalog; "no" is only reported when the catalog provably
covers every group that could matter, otherwise the answer is "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

from .algebra import is_abelian
from .commuting import commuting_graph, extended_commuting_graph
from .errors import EmptyGraph
from .graph import SimpleGraph, induced_subgraph
from .groups import GroupCatalog, default_catalog, named_group
from .invariants import are_isomorphic, connected_components, is_isomorphism
from .rees import build_rees, identity_sandwich, translate

Answer = Literal["yes", "no", "unknown"]


@dataclass
class CharacterizationVerdict:
    answer: Answer
    witness: dict[str, Any] | None = None
    refutation: list[dict[str, Any]] = field(default_factory=list)
    catalog_bound_used: int = 0

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"answer": self.answer, "catalog_bound_used": self.catalog_bound_used}
        if self.witness is not None:
            out["witness"] = self.witness
        out["refutation"] = self.refutation
        return out


def _realize_components(g: SimpleGraph, comps, group_name: str, group, isos) -> dict[str, Any]:
    """Witness for the multi-component case, built from per-component isomorphisms.

    Component k of ``g`` goes to the H-class (0, k) of M(G; 1, m; P) via
    component -> G*(G) -> translate.
    """
    m = len(comps)
    s = build_rees(group, 1, m, identity_sandwich(group, 1, m))
    cg = commuting_graph(s)
    mapping = [0] * g.vertex_count
    for k, (comp, iso) in enumerate(zip(comps, isos)):
        for j, v in enumerate(comp):
            mapping[v] = cg.vertex_of(s.encode(translate(s, 0, k, iso[j])))
    assert is_isomorphism(g, cg.graph, mapping)
    return {
        "condition": 2,
        "group": group_name,
        "group_order": group.order,
        "i_size": 1,
        "lambda_size": m,
        "p": "identity",
        "mapping": mapping,
    }


def characterize_graph(g: SimpleGraph, catalog: GroupCatalog | None = None) -> CharacterizationVerdict:
    catalog = catalog or default_catalog()
    v = g.vertex_count
    if v < 1:
        raise EmptyGraph("graph must have at least one vertex")
    trace: list[dict[str, Any]] = []
    bound_used = 0

    # condition 2: several components, all copies of one G*(G)
    comps = connected_components(g)
    cond2 = "refuted"
    if len(comps) < 2:
        trace.append({"condition": 2, "status": "refuted", "reason": "fewer than two connected components"})
    else:
        subs = [induced_subgraph(g, c)[0] for c in comps]
        if any(are_isomorphic(sub, subs[0]) is None for sub in subs[1:]):
            trace.append({"condition": 2, "status": "refuted",
                          "reason": "connected components are not mutually isomorphic"})
        else:
            size = subs[0].vertex_count
            bound_used = max(bound_used, size)
            for name, grp in catalog.of_order(size):
                iso = are_isomorphic(subs[0], extended_commuting_graph(grp).graph)
                if iso is None:
                    continue
                isos = [iso] + [
                    tuple(iso[j] for j in are_isomorphic(sub, subs[0])) for sub in subs[1:]
                ]
                witness = _realize_components(g, comps, name, grp, isos)
                return CharacterizationVerdict("yes", witness, trace, bound_used)
            if size <= catalog.complete_up_to:
                trace.append({"condition": 2, "status": "refuted",
                              "reason": f"no group of order {size} has an extended commuting graph "
                                        f"isomorphic to the components"})
            else:
                cond2 = "unknown"
                trace.append({"condition": 2, "status": "unknown",
                              "reason": f"component size {size} exceeds catalog coverage "
                                        f"{catalog.complete_up_to}"})

    # condition 1: G(H) for a non-abelian H with |H| = v + |Z(H)| and |Z(H)| <= |H|/4
    lo, hi = v + 1, (4 * v) // 3
    bound_used = max(bound_used, hi)
    for order in range(lo, min(hi, catalog.complete_up_to) + 1):
        for name, grp in catalog.of_order(order):
            if is_abelian(grp):
                continue
            cg = commuting_graph(grp).graph
            if cg.vertex_count != v:
                continue
            iso = are_isomorphic(g, cg)
            if iso is not None:
                witness = {"condition": 1, "group": name, "group_order": grp.order,
                           "i_size": 1, "lambda_size": 1, "p": "identity", "mapping": list(iso)}
                return CharacterizationVerdict("yes", witness, trace, bound_used)
    if hi <= catalog.complete_up_to:
        cond1 = "refuted"
        reason = (f"no non-abelian group of order {lo}..{hi} has this commuting graph"
                  if lo <= hi else f"{v} vertices admit no non-abelian group (needs {lo} <= |H| <= {hi})")
    else:
        cond1 = "unknown"
        reason = f"group orders up to {hi} would be needed; catalog covers {catalog.complete_up_to}"
    trace.append({"condition": 1, "status": cond1, "reason": reason})

    answer: Answer = "no" if cond1 == "refuted" and cond2 == "refuted" else "unknown"
    return CharacterizationVerdict(answer, None, trace, bound_used)


def verify_witness(g: SimpleGraph, verdict: CharacterizationVerdict) -> bool:
    """Rebuild the witness semigroup and re-check the stored isomorphism."""
    w = verdict.witness
    if verdict.answer != "yes" or w is None:
        return False
    grp = named_group(w["group"])
    s = build_rees(grp, w["i_size"], w["lambda_size"], identity_sandwich(grp, w["i_size"], w["lambda_size"]))
    target = commuting_graph(grp if s.is_group_case else s).graph
    return is_isomorphism(g, target, w["mapping"])
