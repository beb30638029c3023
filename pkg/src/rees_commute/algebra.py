"""Finite semigroups and groups given by Cayley tables.

Elements are the integers ``0 .. order-1``; labels are only for display.
``table[x][y]`` is the product ``x*y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .errors import (
    DuplicateLabel,
    IndexOutOfRange,
    InputError,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    SizeLimitExceeded,
)

ElementSet = tuple[int, ...]

DEFAULT_GROUP_CAP = 64


@dataclass(frozen=True, eq=True)
class MulSystem:
    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def commute(self, x: int, y: int) -> bool:
        return self.table[x][y] == self.table[y][x]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int32).reshape(self.order, self.order)
        arr.flags.writeable = False
        return arr

    @property
    def system(self) -> MulSystem:
        return self


@dataclass(frozen=True, eq=True)
class FiniteGroup:
    system: MulSystem
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.system.order

    @property
    def labels(self) -> tuple[str, ...]:
        return self.system.labels

    def mul(self, x: int, y: int) -> int:
        return self.system.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]


Algebra = Union[MulSystem, FiniteGroup]


def as_system(s) -> MulSystem:
    """Return the underlying ``MulSystem`` of a system, group or Rees semigroup."""
    return s if isinstance(s, MulSystem) else s.system


def first_associativity_violation(table: np.ndarray) -> tuple[int, int, int] | None:
    """Lexicographically first (a, b, c) with (ab)c != a(bc), or None."""
    n = table.shape[0]
    for a in range(n):
        left = table[table[a]]  # left[b, c] = (a*b)*c
        right = table[a][table]  # right[b, c] = a*(b*c)
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = bad[0]
            return (a, int(b), int(c))
    return None


def system_from_table(
    order: int,
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
) -> MulSystem:
    if order < 1:
        raise InputError("order must be positive")
    if len(table) != order or any(len(row) != order for row in table):
        raise IndexOutOfRange(f"table must be {order}x{order}")
    rows = []
    for x, row in enumerate(table):
        for y, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < order:
                raise IndexOutOfRange(f"table[{x}][{y}] = {v!r} not in [0, {order})")
        rows.append(tuple(int(v) for v in row))
    if labels is None:
        labels = [str(i) for i in range(order)]
    labels = tuple(str(s) for s in labels)
    if len(labels) != order:
        raise DuplicateLabel(f"expected {order} labels, got {len(labels)}")
    if len(set(labels)) != order:
        dup = next(s for s in labels if labels.count(s) > 1)
        raise DuplicateLabel(f"label {dup!r} used more than once")
    arr = np.array(rows, dtype=np.int32)
    bad = first_associativity_violation(arr)
    if bad is not None:
        raise NotAssociative(bad)
    return MulSystem(order, tuple(rows), labels)


def group_from_system(s: MulSystem) -> FiniteGroup:
    n, t = s.order, s.table
    identity = next(
        (e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))),
        None,
    )
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    inverse = []
    for x in range(n):
        y = next((y for y in range(n) if t[x][y] == identity and t[y][x] == identity), None)
        if y is None:
            raise MissingInverse(f"element {s.labels[x]!r} has no two-sided inverse")
        inverse.append(y)
    return FiniteGroup(s, identity, tuple(inverse))


def group_from_table(
    order: int,
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
) -> FiniteGroup:
    return group_from_system(system_from_table(order, table, labels))


def center(s: Algebra) -> ElementSet:
    s = as_system(s)
    n, t = s.order, s.table
    return tuple(x for x in range(n) if all(t[x][y] == t[y][x] for y in range(n)))


def is_abelian(s: Algebra) -> bool:
    s = as_system(s)
    t = s.array
    return bool((t == t.T).all())


def _members(mask: int) -> ElementSet:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def abelian_subgroups(
    g: FiniteGroup,
    maximal_only: bool = False,
    max_order: int = DEFAULT_GROUP_CAP,
) -> list[ElementSet]:
    """All abelian subgroups of ``g`` (or only the inclusion-maximal ones).

    Starts from the trivial subgroup and repeatedly adjoins an element that
    centralizes the current subgroup, so every abelian subgroup is reached
    without scanning subsets.  Ordered by size descending, then by member list.
    """
    n = g.order
    if n > max_order:
        raise SizeLimitExceeded(f"group order {n} exceeds cap {max_order}")
    t = g.system.table
    commutes = [sum(1 << y for y in range(n) if t[x][y] == t[y][x]) for x in range(n)]

    cyclic = []
    for x in range(n):
        powers, y = [g.identity], x
        while y != g.identity:
            powers.append(y)
            y = t[y][x]
        cyclic.append(powers)

    def centralizer(mask: int) -> int:
        c = (1 << n) - 1
        for x in _members(mask):
            c &= commutes[x]
        return c

    trivial = 1 << g.identity
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for h in frontier:
            members = _members(h)
            for x in _members(centralizer(h) & ~h):
                k = 0
                for a in members:
                    for b in cyclic[x]:
                        k |= 1 << t[a][b]
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        frontier = nxt

    if maximal_only:
        # maximal iff the centralizer adds nothing new
        found = {h for h in found if centralizer(h) & ~h == 0}
    subgroups = [_members(h) for h in found]
    subgroups.sort(key=lambda m: (-len(m), m))
    return subgroups


def max_abelian_subgroup_size(g: FiniteGroup, max_order: int = DEFAULT_GROUP_CAP) -> int:
    return len(abelian_subgroups(g, maximal_only=True, max_order=max_order)[0])


def element_order(g: FiniteGroup, x: int) -> int:
    k, y = 1, x
    while y != g.identity:
        y = g.mul(y, x)
        k += 1
    return k
