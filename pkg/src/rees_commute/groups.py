"""Named groups and the shipped catalog of all groups of order at most 15.

Every constructed group has its identity at index 0.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .algebra import DEFAULT_GROUP_CAP, FiniteGroup, group_from_table
from .errors import SizeLimitExceeded, UnknownSpec


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def cyclic(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["e"] + [_power_label("a", k) for k in range(1, n)]
    return group_from_table(n, table, labels)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; index j*n + k stands for r^k s^j."""

    def mul(x: int, y: int) -> int:
        (j1, k1), (j2, k2) = divmod(x, n), divmod(y, n)
        k = (k1 + (-k2 if j1 else k2)) % n
        return ((j1 + j2) % 2) * n + k

    m = 2 * n
    table = [[mul(x, y) for y in range(m)] for x in range(m)]
    labels = []
    for j in range(2):
        for k in range(n):
            lab = _power_label("r", k) + ("s" if j else "")
            labels.append(lab or "e")
    return group_from_table(m, table, labels)


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>."""
    m = 2 * n

    def mul(p: int, q: int) -> int:
        (i, k), (j, l) = divmod(p, m), divmod(q, m)
        if i == 0:
            return j * m + (k + l) % m
        if j == 0:
            return m + (k - l) % m
        return (k - l + n) % m

    order = 4 * n
    table = [[mul(p, q) for q in range(order)] for p in range(order)]
    labels = []
    for j in range(2):
        for k in range(m):
            lab = _power_label("a", k) + ("x" if j else "")
            labels.append(lab or "e")
    return group_from_table(order, table, labels)


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) or "()"


def _perm_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    # (p*q)(x) = p(q(x)), i.e. q is applied first
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]
    return group_from_table(len(perms), table, [_cycle_label(p) for p in perms])


def _parity(perm: tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j]) % 2


def symmetric(n: int) -> FiniteGroup:
    return _perm_group(list(itertools.permutations(range(n))))


def alternating(n: int) -> FiniteGroup:
    return _perm_group([p for p in itertools.permutations(range(n)) if _parity(p) == 0])


def quaternion() -> FiniteGroup:
    # unit i, j, k products: (sign, unit)
    units = ["1", "i", "j", "k"]
    unit_mul = {
        ("1", u): (1, u) for u in units
    } | {
        (u, "1"): (1, u) for u in units
    } | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]
    labels = [("" if s > 0 else "-") + u for s, u in elems]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = unit_mul[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        table.append(row)
    return group_from_table(8, table, labels)


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Product with mixed-radix indexing; the first factor is most significant."""
    sizes = [f.order for f in factors]
    elems = list(itertools.product(*(range(s) for s in sizes)))
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [index[tuple(f.mul(a, b) for f, a, b in zip(factors, x, y))] for y in elems]
        for x in elems
    ]
    labels = ["(" + ";".join(f.labels[a] for f, a in zip(factors, x)) + ")" for x in elems]
    return group_from_table(len(elems), table, labels)


_ATOM = re.compile(r"^(C|D|S|Dic)(\d+)$|^(A4|Q8)$")


def _atom_order(name: str) -> int:
    m = _ATOM.match(name)
    if m is None:
        raise UnknownSpec(f"unknown group name {name!r}")
    if m.group(3):
        return {"A4": 12, "Q8": 8}[m.group(3)]
    kind, n = m.group(1), int(m.group(2))
    if kind == "C" and n >= 1:
        return n
    if kind == "D" and n >= 3:
        return 2 * n
    if kind == "S" and 2 <= n <= 5:
        return math.factorial(n)
    if kind == "Dic" and n >= 2:
        return 4 * n
    raise UnknownSpec(f"group name {name!r} out of the supported range")


@lru_cache(maxsize=None)
def _build_atom(name: str) -> FiniteGroup:
    if name == "A4":
        return alternating(4)
    if name == "Q8":
        return quaternion()
    kind, n = _ATOM.match(name).group(1, 2)
    n = int(n)
    return {"C": cyclic, "D": dihedral, "S": symmetric, "Dic": dicyclic}[kind](n)


def split_spec(spec: str) -> list[str]:
    parts = [p.strip() for p in re.split(r"\s+x\s+|\s*×\s*", spec.strip())]
    if not parts or any(not p for p in parts):
        raise UnknownSpec(f"malformed group spec {spec!r}")
    return parts


def named_group(spec: str, max_order: int = DEFAULT_GROUP_CAP) -> FiniteGroup:
    """Build a group from a name such as ``"S3"``, ``"D4"`` or ``"C2 x C2"``.

    Accepted atoms: ``C{n}`` (n >= 1), ``D{n}`` (order 2n, n >= 3),
    ``S{n}`` (2 <= n <= 5), ``Dic{n}`` (order 4n, n >= 2), ``A4``, ``Q8``.
    Atoms may be combined into direct products with `` x ``.
    """
    if not isinstance(spec, str):
        raise UnknownSpec(f"group spec must be a string, got {type(spec).__name__}")
    parts = split_spec(spec)
    order = 1
    for p in parts:
        order *= _atom_order(p)
    if order > max_order:
        raise SizeLimitExceeded(f"group {spec!r} has order {order}, above cap {max_order}")
    if len(parts) == 1:
        return _build_atom(parts[0])
    return direct_product(*(_build_atom(p) for p in parts))


# Every group of order <= 15 up to isomorphism (the standard classification;
# 28 groups).  Shipped as Cayley-table files under data/catalog.
CATALOG_SPECS: tuple[str, ...] = (
    "C1", "C2", "C3", "C4", "C2 x C2", "C5", "C6", "S3", "C7",
    "C8", "C4 x C2", "C2 x C2 x C2", "D4", "Q8", "C9", "C3 x C3",
    "C10", "D5", "C11", "C12", "C6 x C2", "A4", "D6", "Dic3",
    "C13", "C14", "D7", "C15",
)
CATALOG_COMPLETE_UP_TO = 15


def catalog_filename(spec: str) -> str:
    return spec.replace(" x ", "x") + ".cayley"


@dataclass(frozen=True)
class GroupCatalog:
    names: tuple[str, ...]
    groups: tuple[FiniteGroup, ...]
    complete_up_to: int

    def of_order(self, n: int) -> list[tuple[str, FiniteGroup]]:
        return [(s, g) for s, g in zip(self.names, self.groups) if g.order == n]


@lru_cache(maxsize=None)
def _load_catalog_group(spec: str) -> FiniteGroup:
    from .formats import parse_cayley

    text = resources.files("rees_commute").joinpath("data").joinpath("catalog").joinpath(catalog_filename(spec)).read_text()
    return parse_cayley(text, as_group=True)


def default_catalog(max_order: int = CATALOG_COMPLETE_UP_TO) -> GroupCatalog:
    """Catalog restricted to orders <= ``max_order`` (coverage never exceeds 15)."""
    names, groups = [], []
    for spec in CATALOG_SPECS:
        g = _load_catalog_group(spec)
        if g.order <= max_order:
            names.append(spec)
            groups.append(g)
    return GroupCatalog(tuple(names), tuple(groups), min(max_order, CATALOG_COMPLETE_UP_TO))
