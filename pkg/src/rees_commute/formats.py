"""Text formats: Cayley tables, edge lists, DOT, and Rees spec JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .algebra import FiniteGroup, MulSystem, group_from_system, system_from_table
from .errors import InputError, UnknownSpec
from .graph import SimpleGraph
from .groups import named_group
from .rees import (
    ReesMatrixSemigroup,
    SandwichMatrix,
    build_rees,
    identity_sandwich,
    random_sandwich,
)


def parse_cayley(text: str, as_group: bool = False) -> MulSystem | FiniteGroup:
    """Line 1: order n; next n lines: rows of the table; optional label line."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    try:
        n = int(lines[0])
        rows = [[int(v) for v in ln.split()] for ln in lines[1 : n + 1]]
    except (IndexError, ValueError) as exc:
        raise InputError(f"malformed Cayley table: {exc}") from None
    if len(rows) != n:
        raise InputError(f"expected {n} table rows, got {len(rows)}")
    labels = None
    if len(lines) > n + 1 and lines[n + 1]:
        labels = [s.strip() for s in lines[n + 1].split(",")]
    s = system_from_table(n, rows, labels)
    return group_from_system(s) if as_group else s


def format_cayley(s: MulSystem | FiniteGroup) -> str:
    s = s if isinstance(s, MulSystem) else s.system
    if any("," in lab for lab in s.labels):
        raise InputError("labels containing commas cannot be written in Cayley format")
    out = [str(s.order)]
    out += [" ".join(map(str, row)) for row in s.table]
    out.append(",".join(s.labels))
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    """Line 1: vertex count; then one ``u w`` edge per line."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    try:
        n = int(lines[0])
        edges = [tuple(int(v) for v in ln.split()) for ln in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise InputError(f"malformed graph file: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise InputError("each edge line must hold exactly two vertices")
    return SimpleGraph.from_edges(n, edges)


def format_graph(g: SimpleGraph) -> str:
    return "".join([f"{g.vertex_count}\n"] + [f"{u} {w}\n" for u, w in g.edges()])


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    out = [f"graph {_dot_quote(name)} {{"]
    for v in range(g.vertex_count):
        out.append(f"  n{v} [label={_dot_quote(g.label(v))}];")
    for u, w in g.edges():
        out.append(f"  n{u} -- n{w};")
    out.append("}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class ReesSpec:
    """A parsed Rees spec plus an echo suitable for reports."""

    semigroup: ReesMatrixSemigroup
    echo: dict[str, Any]


def load_group(spec: Any, max_order: int | None = None) -> tuple[FiniteGroup, Any]:
    """Group from a name, ``@path`` to a Cayley file, or ``{"cayley": text}``."""
    kwargs = {} if max_order is None else {"max_order": max_order}
    if isinstance(spec, dict):
        if set(spec) != {"cayley"}:
            raise UnknownSpec('group object must have exactly the key "cayley"')
        g = parse_cayley(spec["cayley"], as_group=True)
        return g, {"cayley_order": g.order}
    if isinstance(spec, str) and spec.startswith("@"):
        g = parse_cayley(Path(spec[1:]).read_text(), as_group=True)
        return g, spec
    return named_group(spec, **kwargs), spec


def _entry(group: FiniteGroup, v: Any) -> int:
    if isinstance(v, bool):
        raise InputError(f"invalid sandwich entry {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str) and v in group.labels:
        return group.labels.index(v)
    raise InputError(f"sandwich entry {v!r} is neither an index nor a label of G")


def sandwich_from(
    group: FiniteGroup,
    i_size: int,
    lambda_size: int,
    p: Any,
    seed: int | None,
) -> SandwichMatrix:
    if p == "random":
        if seed is None or isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise InputError('"seed" (unsigned integer) is required when "p" is "random"')
        return random_sandwich(group, i_size, lambda_size, seed)
    if p == "identity" or p is None:
        return identity_sandwich(group, i_size, lambda_size)
    if not isinstance(p, list) or not all(isinstance(r, list) for r in p):
        raise InputError('"p" must be a list of rows, "random" or "identity"')
    return SandwichMatrix.from_rows([[_entry(group, v) for v in row] for row in p])


def rees_from_json(obj: dict, max_order: int | None = None) -> ReesSpec:
    """Build a semigroup from the JSON spec object.

    Keys: ``group``, ``i_size``, ``lambda_size``, ``p`` (rows over Lambda of
    entries over I, or ``"random"``/``"identity"``) and ``seed``.
    """
    if not isinstance(obj, dict):
        raise InputError("Rees spec must be a JSON object")
    unknown = set(obj) - {"group", "i_size", "lambda_size", "p", "seed"}
    if unknown:
        raise InputError(f"unknown Rees spec keys: {sorted(unknown)}")
    try:
        group_spec, i_size, lambda_size = obj["group"], obj["i_size"], obj["lambda_size"]
    except KeyError as exc:
        raise InputError(f"Rees spec is missing key {exc}") from None
    for k, v in (("i_size", i_size), ("lambda_size", lambda_size)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InputError(f"{k} must be a positive integer")
    group, group_echo = load_group(group_spec)
    p_spec, seed = obj.get("p", "identity"), obj.get("seed")
    p = sandwich_from(group, i_size, lambda_size, p_spec, seed)
    kwargs = {} if max_order is None else {"max_order": max_order}
    s = build_rees(group, i_size, lambda_size, p, **kwargs)
    echo = {"group": group_echo, "group_order": group.order, "i_size": i_size, "lambda_size": lambda_size}
    if p_spec == "random":
        echo["seed"] = seed
    echo["p"] = [list(r) for r in p.entries]
    return ReesSpec(s, echo)


def load_rees_spec(path: str | Path) -> ReesSpec:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    return rees_from_json(obj)
