"""Command-line entry point: ``rees-commute {analyze,verify,characterize,export-dot}``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .characterize import characterize_graph
from .errors import InputError, ReesCommuteError, ResourceError
from .formats import load_group, load_rees_spec, parse_graph, rees_from_json, to_dot
from .groups import default_catalog
from .report import analyze, extended_or_plain
from .suite import load_fixture, run_suite, summarize


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _matrix_arg(value: str | None) -> Any:
    if value is None or value == "identity":
        return "identity"
    if value == "random":
        return "random"
    if value.startswith("@"):
        try:
            return json.loads(Path(value[1:]).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read matrix file {value[1:]}: {exc}") from None
    raise InputError(f"--matrix must be random, identity or @file, got {value!r}")


def _load_target(args):
    """The object to analyse plus its echo, from a spec file or inline flags."""
    if args.as_group:
        if args.spec:
            raise InputError("--as-group takes the group from --group, not a spec file")
        if not args.group:
            raise InputError("--as-group needs --group")
        group, echo = load_group(args.group)
        return group, {"group": echo, "group_order": group.order}
    if args.spec:
        spec = load_rees_spec(args.spec)
    else:
        if not args.group:
            raise InputError("give a Rees spec file or --group")
        obj = {
            "group": args.group,
            "i_size": args.cols,
            "lambda_size": args.rows,
            "p": _matrix_arg(args.matrix),
        }
        if args.seed is not None:
            obj["seed"] = args.seed
        spec = rees_from_json(obj)
    return spec.semigroup, spec.echo


def cmd_analyze(args) -> int:
    obj, echo = _load_target(args)
    report = analyze(obj, echo, max_path_budget=args.max_path_budget, timings=args.timings)
    _emit(_dump(report), args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(extended_or_plain(obj, args.extended).graph))
    return 0


def cmd_export_dot(args) -> int:
    obj, _ = _load_target(args)
    _emit(to_dot(extended_or_plain(obj, args.extended).graph), args.out)
    return 0


def cmd_verify(args) -> int:
    fixture = load_fixture(args.fixture)
    if args.suite == "fast":
        fixture = fixture.fast()
    results = run_suite(fixture, workers=args.workers)
    _emit(_dump([r.to_json() for r in results]), args.out)
    sys.stderr.write(json.dumps(summarize(results), sort_keys=True) + "\n")
    failed = [r for r in results if r.verdict == "fail" and not r.calibration]
    if failed:
        first = failed[0]
        sys.stderr.write(f"FAIL {first.check_id} on {first.instance}\n{_dump(first.witness)}")
        return 1
    return 0


def cmd_characterize(args) -> int:
    try:
        graph = parse_graph(Path(args.graph).read_text())
    except OSError as exc:
        raise InputError(f"cannot read graph file: {exc}") from None
    catalog = default_catalog(args.catalog_order)
    verdict = characterize_graph(graph, catalog)
    _emit(_dump(verdict.to_json()), args.out)
    return 0


def _add_target_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("spec", nargs="?", help="Rees spec JSON file")
    p.add_argument("-g", "--group", help="named group (e.g. S3, 'C2 x C2') or @file.cayley")
    p.add_argument("--rows", type=int, default=1, help="|Lambda|, rows of the sandwich matrix")
    p.add_argument("--cols", type=int, default=1, help="|I|, columns of the sandwich matrix")
    p.add_argument("--matrix", help="random | identity | @file.json (rows over Lambda)")
    p.add_argument("--seed", type=int, help="seed for --matrix random")
    p.add_argument("--as-group", action="store_true", help="analyse the bare group's commuting graph")
    p.add_argument("--extended", action="store_true", help="use the extended commuting graph for DOT output")
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rees-commute", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one semigroup or group")
    _add_target_flags(p)
    p.add_argument("--dot", help="also write a DOT rendering of the graph here")
    p.add_argument("--max-path-budget", type=int, help="search budget for the left-path search")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not byte-stable)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the checker suite over a fixture matrix")
    p.add_argument("fixture", nargs="?", help="suite fixture JSON (default: built-in matrix)")
    p.add_argument("--suite", choices=("full", "fast"), default="full")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("characterize", help="is this graph the commuting graph of a completely simple semigroup?")
    p.add_argument("graph", help="graph text file")
    p.add_argument("--catalog-order", type=int, default=15)
    p.add_argument("--out")
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser("export-dot", help="DOT export of a commuting graph")
    _add_target_flags(p)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as exc:
        sys.stderr.write(_dump(exc.to_json()))
        return 3
    except (ReesCommuteError, OSError) as exc:
        payload = exc.to_json() if isinstance(exc, ReesCommuteError) else {"error": "InputError", "message": str(exc)}
        sys.stderr.write(_dump(payload))
        return 2


if __name__ == "__main__":
    sys.exit(main())
