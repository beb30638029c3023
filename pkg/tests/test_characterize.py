from __future__ import annotations

import pytest

from rees_commute.characterize import characterize_graph, verify_witness
from rees_commute.commuting import commuting_graph
from rees_commute.errors import EmptyGraph
from rees_commute.graph import SimpleGraph, complete_graph, disjoint_union, empty_graph
from rees_commute.groups import default_catalog, named_group
from rees_commute.rees import build_rees, random_sandwich

CATALOG = default_catalog()


def copies(g, k):
    return disjoint_union(*([g] * k))


def test_four_triangles():
    g = copies(complete_graph(3), 4)
    v = characterize_graph(g, CATALOG)
    assert v.answer == "yes"
    w = v.witness
    assert (w["condition"], w["group"], w["i_size"], w["lambda_size"]) == (2, "C3", 1, 4)
    assert verify_witness(g, v)


def test_s3_commuting_graph_is_recognised():
    g = commuting_graph(named_group("S3")).graph
    v = characterize_graph(g, CATALOG)
    assert v.answer == "yes" and v.witness["group"] == "S3" and v.witness["condition"] == 1
    assert verify_witness(g, v)


@pytest.mark.parametrize("g", [
    disjoint_union(complete_graph(3), complete_graph(4)),
    complete_graph(1),
    complete_graph(2),
])
def test_refuted(g):
    v = characterize_graph(g, CATALOG)
    assert v.answer == "no"
    assert {r["condition"] for r in v.refutation} == {1, 2}
    assert all(r["status"] == "refuted" for r in v.refutation)
    assert not verify_witness(g, v)


def test_k3_k4_bound():
    v = characterize_graph(disjoint_union(complete_graph(3), complete_graph(4)), CATALOG)
    assert v.catalog_bound_used == 9  # floor(4 * 7 / 3)


def test_outside_catalog_is_unknown():
    g = copies(complete_graph(20), 2)
    v = characterize_graph(g, CATALOG)
    assert v.answer == "unknown" and v.witness is None


def test_small_catalog_is_unknown():
    v = characterize_graph(copies(complete_graph(3), 2), default_catalog(2))
    assert v.answer == "unknown"


@pytest.mark.parametrize("name,m,n", [("S3", 2, 1), ("Q8", 1, 2), ("D4", 2, 2), ("C5", 3, 1), ("C1", 2, 2)])
def test_rees_commuting_graphs_are_recognised(name, m, n):
    grp = named_group(name)
    s = build_rees(grp, m, n, random_sandwich(grp, m, n, 1))
    g = commuting_graph(s).graph
    v = characterize_graph(g, CATALOG)
    assert v.answer == "yes" and verify_witness(g, v)
    assert v.witness["lambda_size"] == m * n


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "D5", "A4", "D6", "Dic3", "D7"])
def test_every_nonabelian_catalog_group(name):
    g = commuting_graph(named_group(name)).graph
    v = characterize_graph(g, CATALOG)
    assert v.answer == "yes" and verify_witness(g, v)


def test_three_disjoint_edges_found_through_components():
    # G(D4) = 3 K2 = G(M(C2; 1, 3; P)); the component condition is tried first
    v = characterize_graph(commuting_graph(named_group("D4")).graph, CATALOG)
    assert (v.witness["condition"], v.witness["group"], v.witness["lambda_size"]) == (2, "C2", 3)


def test_tampered_witness_fails():
    g = copies(complete_graph(3), 2)
    v = characterize_graph(g, CATALOG)
    m = v.witness["mapping"]
    m[0], m[3] = m[3], m[0]  # one vertex of each triangle trades places
    assert not verify_witness(g, v)


def test_edgeless_components():
    # k copies of K1 are realised by M(C1; 1, k; P)
    v = characterize_graph(empty_graph(3), CATALOG)
    assert v.answer == "yes" and v.witness["group"] == "C1"


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraph):
        characterize_graph(empty_graph(0), CATALOG)


def test_verdict_json():
    v = characterize_graph(complete_graph(2), CATALOG).to_json()
    assert v["answer"] == "no" and "witness" not in v and len(v["refutation"]) == 2


def test_path_graph_refuted():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert characterize_graph(g, CATALOG).answer == "no"
