"""Commuting graphs of Rees matrix semigroups over finite groups."""

from .algebra import (
    FiniteGroup,
    MulSystem,
    abelian_subgroups,
    center,
    group_from_table,
    is_abelian,
    max_abelian_subgroup_size,
    system_from_table,
)
from .commuting import (
    LabeledCommGraph,
    commuting_graph,
    extended_commuting_graph,
    find_left_path,
    knit_degree,
)
from .graph import SimpleGraph, complete_graph, graph_join, induced_subgraph
from .groups import GroupCatalog, default_catalog, named_group
from .invariants import (
    are_isomorphic,
    chromatic_number,
    clique_number,
    connected_components,
    diameter,
    girth,
    maximal_cliques,
)
from .rees import (
    ReesMatrixSemigroup,
    SandwichMatrix,
    build_rees,
    commute_by_lemma,
    h_classes,
    rees_product,
    translate,
)

__all__ = [
    "FiniteGroup",
    "GroupCatalog",
    "LabeledCommGraph",
    "MulSystem",
    "ReesMatrixSemigroup",
    "SandwichMatrix",
    "SimpleGraph",
    "abelian_subgroups",
    "are_isomorphic",
    "build_rees",
    "center",
    "chromatic_number",
    "clique_number",
    "commute_by_lemma",
    "commuting_graph",
    "complete_graph",
    "connected_components",
    "default_catalog",
    "diameter",
    "extended_commuting_graph",
    "find_left_path",
    "girth",
    "graph_join",
    "group_from_table",
    "h_classes",
    "induced_subgraph",
    "is_abelian",
    "knit_degree",
    "max_abelian_subgroup_size",
    "maximal_cliques",
    "named_group",
    "rees_product",
    "system_from_table",
    "translate",
]

__version__ = "0.1.0"
