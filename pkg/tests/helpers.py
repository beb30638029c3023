from __future__ import annotations

from hypothesis import strategies as st

from rees_commute.graph import SimpleGraph
from rees_commute.groups import named_group
from rees_commute.rees import build_rees, random_sandwich


def rees(name: str, m: int, n: int, seed: int = 0):
    """M(name; m, n; P) with P drawn from ``seed``."""
    g = named_group(name)
    return build_rees(g, m, n, random_sandwich(g, m, n, seed))


def table_of(obj):
    return [list(row) for row in (obj.system if hasattr(obj, "system") else obj).table]


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return SimpleGraph.from_edges(n, chosen)
