"""Run every applicable checker over a matrix of groups, index sizes and seeds."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Any, Callable

from . import checks
from .algebra import is_abelian
from .checks import CheckResult
from .errors import InputError, ReesCommuteError
from .formats import load_group
from .rees import build_rees, random_sandwich

REES_CHECKS: dict[str, Callable[..., CheckResult]] = {
    "center_empty": checks.check_center_empty,
    "commutation_lemma": checks.check_commutation_lemma,
    "translation_lemma": checks.check_translation_lemma,
    "component_structure": checks.check_component_structure,
    "matrix_independence": None,  # needs two matrices, handled below
    "max_commutative": checks.check_max_commutative,
    "clique_number": checks.check_clique_number,
    "girth": checks.check_girth,
    "chromatic_number": checks.check_chromatic_number,
    "no_left_paths": checks.check_no_left_paths,
}
GROUP_CHECKS = ("girth", "no_left_paths")
CHECK_IDS = tuple(REES_CHECKS) + ("attainability",)

DEFAULT_FIXTURE: dict[str, Any] = {
    "groups": ["C1", "C2", "C3", "C4", "C5", "C6", "C2 x C2", "S3", "D4", "Q8"],
    "index_pairs": [[1, 2], [2, 1], [2, 2], [3, 2]],
    "seeds": [0, 1],
    "checks": "all",
}


@dataclass(frozen=True)
class SuiteFixture:
    groups: tuple[Any, ...]
    index_pairs: tuple[tuple[int, int], ...]
    seeds: tuple[int, ...]
    checks: tuple[str, ...]
    attainability: tuple[int, ...] = ()
    fault: str | None = None

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> SuiteFixture:
        if not isinstance(obj, dict):
            raise InputError("fixture must be a JSON object")
        unknown = set(obj) - {"groups", "index_pairs", "seeds", "checks", "attainability", "fault"}
        if unknown:
            raise InputError(f"unknown fixture keys: {sorted(unknown)}")
        raw_checks = obj.get("checks", "all")
        if raw_checks == "all" or raw_checks == ["all"]:
            selected = CHECK_IDS
        elif isinstance(raw_checks, list):
            bad = [c for c in raw_checks if c not in CHECK_IDS]
            if bad:
                raise InputError(f"unknown check ids: {bad}")
            selected = tuple(raw_checks)
        else:
            raise InputError('"checks" must be "all" or a list of check ids')
        pairs = []
        for pair in obj.get("index_pairs", []):
            if (not isinstance(pair, list) or len(pair) != 2
                    or not all(isinstance(v, int) and not isinstance(v, bool) and v >= 1 for v in pair)):
                raise InputError(f"index pair {pair!r} must be [i_size, lambda_size] of positive integers")
            pairs.append((pair[0], pair[1]))
        seeds = obj.get("seeds", [0])
        if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in seeds):
            raise InputError("seeds must be unsigned integers")
        fault = obj.get("fault")
        if fault is not None and fault not in checks.FAULTS:
            raise InputError(f"unknown fault {fault!r}; expected one of {checks.FAULTS}")
        return cls(
            groups=tuple(obj.get("groups", [])),
            index_pairs=tuple(pairs),
            seeds=tuple(seeds),
            checks=selected,
            attainability=tuple(obj.get("attainability", [])),
            fault=fault,
        )

    def fast(self) -> SuiteFixture:
        return SuiteFixture(self.groups, self.index_pairs, self.seeds[:1], self.checks,
                            self.attainability, self.fault)


def load_fixture(path: str | Path | None) -> SuiteFixture:
    if path is None:
        return SuiteFixture.from_json(DEFAULT_FIXTURE)
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    return SuiteFixture.from_json(obj)


def _group_name(spec: Any) -> str:
    return spec if isinstance(spec, str) else json.dumps(spec, sort_keys=True)


def _skipped(check_id: str, instance: str, exc: Exception) -> CheckResult:
    return CheckResult(check_id, instance, "skipped", reason=f"{type(exc).__name__}: {exc}")


def _run_one(check_id: str, instance: str, fn: Callable[[], CheckResult]) -> CheckResult:
    try:
        return fn()
    except ReesCommuteError as exc:
        return _skipped(check_id, instance, exc)


def _rees_instance(task: tuple) -> list[CheckResult]:
    spec, m, n, seed, selected, fault = task
    name = _group_name(spec)
    instance = f"M({name};{m},{n};seed={seed})"
    try:
        group, _ = load_group(spec)
        p = random_sandwich(group, m, n, seed)
        s = build_rees(group, m, n, p)
    except ReesCommuteError as exc:
        return [_skipped("build", instance, exc)]
    out = []
    for cid in selected:
        if cid not in REES_CHECKS:
            continue
        if cid == "matrix_independence":
            p2 = random_sandwich(group, m, n, seed + 1)
            fn = partial(checks.check_matrix_independence, group, m, n, p, p2,
                         instance=f"{instance} vs seed={seed + 1}")
        elif cid == "commutation_lemma" and fault == "flip_entry":
            fn = partial(checks.check_commutation_lemma, s, instance, fault=fault)
        elif cid == "translation_lemma" and fault == "transpose_p":
            fn = partial(checks.check_translation_lemma, s, instance, fault=fault)
        else:
            fn = partial(REES_CHECKS[cid], s, instance)
        out.append(_run_one(cid, instance, fn))
    return out


def _group_instance(task: tuple) -> list[CheckResult]:
    spec, selected = task
    instance = f"group {_group_name(spec)}"
    try:
        group, _ = load_group(spec)
    except ReesCommuteError as exc:
        return [_skipped("build", instance, exc)]
    if is_abelian(group):
        return []
    out = []
    for cid in GROUP_CHECKS:
        if cid in selected:
            fn = checks.check_girth if cid == "girth" else checks.check_no_left_paths
            out.append(_run_one(cid, instance, partial(fn, group, instance)))
    return out


def _attainability(n: int) -> list[CheckResult]:
    return [_run_one("attainability", f"M(C{n};2,1)", lambda: checks.check_attainability(n))]


def run_suite(fixture: SuiteFixture, workers: int = 1) -> list[CheckResult]:
    """Results in fixed order: groups, then index pairs, then seeds, then check ids.

    With ``workers > 1`` instances run in separate processes; the output is
    identical to the sequential run.
    """
    tasks: list[tuple[Callable, tuple]] = []
    for spec in fixture.groups:
        for m, n in fixture.index_pairs:
            for seed in fixture.seeds:
                tasks.append((_rees_instance, (spec, m, n, seed, fixture.checks, fixture.fault)))
        tasks.append((_group_instance, (spec, fixture.checks)))
    if "attainability" in fixture.checks:
        for n in fixture.attainability:
            tasks.append((_attainability, n))

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_call, tasks))
    else:
        chunks = [_call(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


def _call(task: tuple[Callable, Any]) -> list[CheckResult]:
    fn, arg = task
    return fn(arg)


def summarize(results: list[CheckResult]) -> dict[str, int]:
    out = {"total": len(results), "pass": 0, "fail": 0, "skipped": 0, "calibration": 0}
    for r in results:
        out[r.verdict] += 1
        out["calibration"] += r.calibration
    return out
