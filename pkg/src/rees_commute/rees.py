"""Rees matrix semigroups M(G; I, Lambda; P) over a finite group.

Index sets are ``range(i_size)`` and ``range(lambda_size)``.  The sandwich
matrix is indexed ``p.entry(lam, i)``: rows run over Lambda, columns over I.
The element (i, x, lam) is stored at flat index
``i * (|G| * lambda_size) + x * lambda_size + lam``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .algebra import FiniteGroup, MulSystem, system_from_table
from .errors import DimensionMismatch, IndexOutOfRange, InputError, SizeLimitExceeded

DEFAULT_REES_CAP = 512

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class SandwichMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, lam: int, i: int) -> int:
        return self.entries[lam][i]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SandwichMatrix:
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        if not entries or not entries[0]:
            raise DimensionMismatch("sandwich matrix must be non-empty")
        if any(len(r) != len(entries[0]) for r in entries):
            raise DimensionMismatch("sandwich matrix rows have different lengths")
        return cls(len(entries), len(entries[0]), entries)


def identity_sandwich(group: FiniteGroup, i_size: int, lambda_size: int) -> SandwichMatrix:
    return SandwichMatrix.from_rows([[group.identity] * i_size for _ in range(lambda_size)])


def random_sandwich(group: FiniteGroup, i_size: int, lambda_size: int, seed: int) -> SandwichMatrix:
    """Entries drawn uniformly from G, row-major, by ``random.Random(seed)``."""
    rng = random.Random(seed)
    return SandwichMatrix.from_rows(
        [[rng.randrange(group.order) for _ in range(i_size)] for _ in range(lambda_size)]
    )


@dataclass(frozen=True)
class ReesMatrixSemigroup:
    group: FiniteGroup
    i_size: int
    lambda_size: int
    p: SandwichMatrix

    @property
    def order(self) -> int:
        return self.i_size * self.group.order * self.lambda_size

    @property
    def is_group_case(self) -> bool:
        return self.i_size == 1 and self.lambda_size == 1

    def encode(self, t: Triple) -> int:
        i, x, lam = t
        return (i * self.group.order + x) * self.lambda_size + lam

    def decode(self, k: int) -> Triple:
        rest, lam = divmod(k, self.lambda_size)
        i, x = divmod(rest, self.group.order)
        return (i, x, lam)

    def triples(self) -> list[Triple]:
        return [self.decode(k) for k in range(self.order)]

    def label(self, t: Triple) -> str:
        i, x, lam = t
        return f"({i},{self.group.labels[x]},{lam})"

    def check_triple(self, t: Triple) -> None:
        i, x, lam = t
        if not (0 <= i < self.i_size and 0 <= x < self.group.order and 0 <= lam < self.lambda_size):
            raise IndexOutOfRange(f"{t} is not an element of this semigroup")

    @cached_property
    def system(self) -> MulSystem:
        """Cayley-table view; associativity is re-validated on first access."""
        table = [
            [self.encode(rees_product(self, a, b)) for b in self.triples()]
            for a in self.triples()
        ]
        return system_from_table(self.order, table, [self.label(t) for t in self.triples()])


def build_rees(
    group: FiniteGroup,
    i_size: int,
    lambda_size: int,
    p: SandwichMatrix,
    max_order: int = DEFAULT_REES_CAP,
) -> ReesMatrixSemigroup:
    if i_size < 1 or lambda_size < 1:
        raise InputError("index set sizes must be at least 1")
    if p.rows != lambda_size or p.cols != i_size:
        raise DimensionMismatch(
            f"sandwich matrix is {p.rows}x{p.cols}, expected {lambda_size}x{i_size} (|Lambda| x |I|)"
        )
    for row in p.entries:
        for v in row:
            if not 0 <= v < group.order:
                raise IndexOutOfRange(f"sandwich entry {v} is not an element of G")
    order = i_size * group.order * lambda_size
    if order > max_order:
        raise SizeLimitExceeded(f"semigroup order {order} exceeds cap {max_order}")
    s = ReesMatrixSemigroup(group, i_size, lambda_size, p)
    s.system  # noqa: B018 - validates associativity eagerly
    return s


def rees_product(s: ReesMatrixSemigroup, a: Triple, b: Triple) -> Triple:
    s.check_triple(a)
    s.check_triple(b)
    g = s.group
    i, x, lam = a
    j, y, mu = b
    return (i, g.mul(g.mul(x, s.p.entry(lam, j)), y), mu)


def h_classes(s: ReesMatrixSemigroup) -> list[tuple[int, ...]]:
    """Blocks {i} x G x {lam} as flat indices, ordered by (i, lam)."""
    return [
        tuple(s.encode((i, x, lam)) for x in range(s.group.order))
        for i in range(s.i_size)
        for lam in range(s.lambda_size)
    ]


def commute_by_lemma(s: ReesMatrixSemigroup, a: Triple, b: Triple) -> bool:
    """Commutation decided from coordinates alone, without forming products in S."""
    i, x, lam = a
    j, y, mu = b
    if i != j or lam != mu:
        return False
    g = s.group
    q = s.p.entry(lam, i)
    return g.mul(g.mul(x, q), y) == g.mul(g.mul(y, q), x)


SandwichLookup = Callable[[int, int], int]


def translate(
    s: ReesMatrixSemigroup,
    i: int,
    lam: int,
    x: int,
    lookup: SandwichLookup | None = None,
) -> Triple:
    """The map x -> (i, p(lam, i)^-1 x, lam) onto the H-class at (i, lam).

    ``lookup`` replaces ``s.p.entry`` and exists for fault injection.
    """
    q = (lookup or s.p.entry)(lam, i)
    return (i, s.group.mul(s.group.inv(q), x), lam)
