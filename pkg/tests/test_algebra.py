from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import table_of
from rees_commute.algebra import (
    abelian_subgroups,
    center,
    element_order,
    group_from_table,
    is_abelian,
    max_abelian_subgroup_size,
    system_from_table,
)
from rees_commute.errors import (
    DuplicateLabel,
    IndexOutOfRange,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    SizeLimitExceeded,
)
from rees_commute.groups import named_group


def test_trivial_system():
    s = system_from_table(1, [[0]])
    assert s.order == 1 and s.mul(0, 0) == 0


def test_t3_is_associative(t3):
    table = table_of(t3)
    assert oracles.associative(table)
    assert t3.table == ((0, 0, 0), (0, 0, 0), (2, 2, 2))
    assert not is_abelian(t3)


def test_semilattice_accepted():
    s = system_from_table(2, [[0, 1], [1, 1]])
    assert oracles.associative(table_of(s))
    assert is_abelian(s)


def test_bad_entry_rejected():
    with pytest.raises(IndexOutOfRange):
        system_from_table(2, [[0, 2], [1, 1]])


def test_non_associative_reports_a_real_triple():
    table = [[1, 0], [0, 0]]
    with pytest.raises(NotAssociative) as info:
        system_from_table(2, table)
    a, b, c = info.value.triple
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_duplicate_labels():
    with pytest.raises(DuplicateLabel):
        system_from_table(2, [[0, 1], [1, 0]], ["x", "x"])


def test_c2_from_addition_table():
    g = group_from_table(2, [[0, 1], [1, 0]])
    assert g.identity == 0 and g.inverse == (0, 1)


def test_s3_from_permutation_composition():
    from itertools import permutations

    perms = list(permutations(range(3)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    g = group_from_table(6, table)
    assert perms[g.identity] == (0, 1, 2)
    assert not is_abelian(g)


def test_semilattice_is_not_a_group():
    with pytest.raises((NoIdentity, MissingInverse)):
        group_from_table(2, [[0, 1], [1, 1]])


def test_no_identity():
    with pytest.raises(NoIdentity):
        group_from_table(2, [[0, 0], [0, 0]])


@pytest.mark.parametrize("name,size", [("C4", 4), ("S3", 1), ("Q8", 2), ("D4", 2), ("A4", 1), ("C1", 1)])
def test_center_sizes(name, size):
    g = named_group(name)
    assert list(center(g)) == oracles.center(table_of(g))
    assert len(center(g)) == size


def test_q8_center_labels():
    g = named_group("Q8")
    assert [g.labels[x] for x in center(g)] == ["1", "-1"]


@pytest.mark.parametrize("name,expected", [("C6", True), ("S3", False), ("C1", True), ("C2 x C2", True), ("Q8", False)])
def test_is_abelian(name, expected):
    assert is_abelian(named_group(name)) is expected


def _by_powerset(g, maximal_only):
    subs = oracles.abelian_subgroups_by_powerset(table_of(g), g.identity)
    if maximal_only:
        subs = [h for h in subs if not any(h < k for k in subs)]
    return sorted((tuple(sorted(h)) for h in subs), key=lambda h: (-len(h), h))


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "C2 x C2", "C6", "C2 x C2 x C2", "Dic3"])
@pytest.mark.parametrize("maximal_only", [False, True])
def test_abelian_subgroups_match_powerset(name, maximal_only):
    g = named_group(name)
    assert abelian_subgroups(g, maximal_only=maximal_only) == _by_powerset(g, maximal_only)


def test_s3_maximal_abelian_sizes():
    g = named_group("S3")
    subs = abelian_subgroups(g, maximal_only=True)
    assert [len(h) for h in subs] == [3, 2, 2, 2]
    assert sorted(g.labels[x] for x in subs[0]) == sorted(["()", "(1 2 3)", "(1 3 2)"])


def test_d4_maximal_abelian():
    subs = abelian_subgroups(named_group("D4"), maximal_only=True)
    assert [len(h) for h in subs] == [4, 4, 4]


def test_c5_unique_maximal():
    assert abelian_subgroups(named_group("C5"), maximal_only=True) == [(0, 1, 2, 3, 4)]


@pytest.mark.parametrize("name,size", [("S3", 3), ("D4", 4), ("Q8", 4), ("A4", 4), ("D5", 5), ("C7", 7), ("Dic3", 6)])
def test_max_abelian_subgroup_size(name, size):
    assert max_abelian_subgroup_size(named_group(name)) == size


def test_subgroup_cap():
    with pytest.raises(SizeLimitExceeded):
        abelian_subgroups(named_group("S4"), max_order=12)


@pytest.mark.parametrize("name", ["S4", "C2 x C2 x C2 x C2 x C2 x C2"])
def test_subgroup_properties_larger_groups(name):
    g = named_group(name)
    subs = abelian_subgroups(g)
    sets = [set(h) for h in subs]
    for h in subs:
        assert g.identity in h
        assert all(g.mul(a, b) in h and g.mul(a, b) == g.mul(b, a) for a in h for b in h)
        assert all(g.inv(a) in h for a in h)
    assert len({tuple(h) for h in subs}) == len(subs)
    maximal = abelian_subgroups(g, maximal_only=True)
    for h in maximal:
        assert not any(set(h) < k for k in sets)


def test_elementary_abelian_64_subgroup_count():
    # subspaces of GF(2)^6: sum of Gaussian binomials
    assert len(abelian_subgroups(named_group("C2 x C2 x C2 x C2 x C2 x C2"))) == 2825


def test_element_order():
    g = named_group("C6")
    assert sorted(element_order(g, x) for x in range(6)) == [1, 2, 3, 3, 6, 6]


GROUPS = ["C1", "C5", "S3", "D4", "Q8", "A4", "C2 x C3", "Dic3", "D5"]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_group_axioms(name, data):
    g = named_group(name)
    n = g.order
    x = data.draw(st.integers(0, n - 1))
    row = {g.mul(x, y) for y in range(n)}
    col = {g.mul(y, x) for y in range(n)}
    assert row == col == set(range(n))
    assert g.inv(g.inv(x)) == x
    assert g.mul(x, g.inv(x)) == g.identity == g.mul(g.inv(x), x)
    assert g.identity == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GROUPS + ["S4"]))
def test_center_is_a_commutative_subgroup(name):
    g = named_group(name)
    z = center(g)
    assert g.identity in z
    assert all(g.mul(a, b) in z and g.mul(a, b) == g.mul(b, a) for a in z for b in z)
    assert all(g.inv(a) in z for a in z)
    assert is_abelian(g) == (len(z) == g.order)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))))
def test_random_tables_validated_exactly(case):
    n, table = case
    if oracles.associative(table):
        s = system_from_table(n, table)
        assert list(center(s)) == oracles.center(table)
    else:
        with pytest.raises(NotAssociative):
            system_from_table(n, table)
