"""Command-line frontend.

Subcommands: ``invariants`` (characteristics of a parsed instance),
``bound`` (evaluate one bound from raw characteristics), ``verify``
(run a sweep and emit a report), ``witnesses`` (the built-in case
witnesses), ``dot`` (GraphViz export of a digraph document).

Exit codes: 0 success, 1 verification violation, 2 usage, parse or
precondition error.  ``SHARPBOUND_MAX_ENUM`` overrides the enumeration
caps for ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bounds, verify
from .digraphs import Digraph, characteristics
from .documents import DocumentError, parse_document, to_dot
from .fixtures import CONJECTURE_LHS, CONJECTURE_PARAMS, WITNESSES_BY_CONJECTURE
from .structures import partition_characteristics, tree_characteristics
from .verify import FixtureMismatch

_CONJ_ALIASES = {
    "1": "conj1",
    "2": "conj2",
    "3": "conj3",
    "4": "conj4",
    "5": "conj5",
    "partition-upper": "partition_upper",
    "partition-lower": "partition_lower",
}

# Required --param names per bound, in evaluator argument order.
_BOUND_PARAMS = {
    "conj1": ("v", "ccmax", "sccmin"),
    "conj2": ("s", "ccmax", "sccmin"),
    "conj3": ("v", "s", "sccmin"),
    "conj4": ("v", "c", "ccmin", "sccmax"),
    "conj5": ("n", "dmin", "dmax"),
    "partition_upper": ("np", "mmin", "mdiff"),
    "partition_lower": ("np", "mmax", "mdiff"),
}

_DEFAULT_MAX_SIZE = {"conj1": 4, "conj2": 4, "conj3": 4, "conj4": 4, "conj5": 7,
                     "partition_upper": 12, "partition_lower": 12}


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(path: str | None, data: str) -> None:
    if path is None:
        sys.stdout.write(data)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(data)


def _fail(message: str, code: int = 2) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _cmd_invariants(args: argparse.Namespace) -> int:
    doc = parse_document(_read_input(args.file), kind=args.kind)
    if isinstance(doc.payload, Digraph):
        record = characteristics(doc.payload).as_dict()
    elif doc.kind == "rooted_tree":
        record = tree_characteristics(doc.payload).as_dict()
    else:
        record = partition_characteristics(doc.payload).as_dict()
    if args.format == "json":
        out = {"schema_version": verify.REPORT_SCHEMA_VERSION, "kind": doc.kind}
        out.update(record)
        print(json.dumps(out, sort_keys=True))
    else:
        print(" ".join(f"{key}={value}" for key, value in record.items()))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    conjecture = _CONJ_ALIASES[args.conjecture]
    names = _BOUND_PARAMS[conjecture]
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"{args.conjecture} requires --{name}")
        values.append(value)

    case = None
    if conjecture == "conj1":
        case, _ = bounds.conj1_case(*values)
        result: object = bounds.conj1_bound(*values)
    elif conjecture == "conj2":
        result = bounds.conj2_bound(*values)
    elif conjecture == "conj3":
        case, _ = bounds.conj3_case(*values)
        result = bounds.conj3_bound(*values)
    elif conjecture == "conj4":
        case, _ = bounds.conj4_case(*values)
        result = bounds.conj4_bound(*values)
    elif conjecture == "conj5":
        interval = bounds.tree_leaf_interval(*values)
        result = [interval.lower, interval.upper]
    elif conjecture == "partition_upper":
        result = bounds.partition_nval_upper(*values)
    else:
        result = bounds.partition_nval_lower(*values)

    if args.format == "json":
        out = {"schema_version": verify.REPORT_SCHEMA_VERSION, "conjecture": conjecture, "bound": result}
        if case is not None:
            out["case"] = {"signs": list(case.signs), "label": case.label}
        print(json.dumps(out, sort_keys=True))
    else:
        text = f"bound={json.dumps(result)}"
        if case is not None:
            text += f" case={case.label}"
        print(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    conjecture = _CONJ_ALIASES[args.conjecture] if args.conjecture else None
    if args.mode != "tree-partition" and conjecture is None:
        raise ValueError("--conj is required unless --mode tree-partition")

    cap = None
    env_cap = os.environ.get("SHARPBOUND_MAX_ENUM")
    if env_cap is not None:
        cap = int(env_cap)
    max_size = args.max_n
    if args.force_cap and max_size is not None:
        cap = max_size

    if args.mode == "tree-partition":
        if max_size is None:
            max_size = 7
        report = verify.cross_check_tree_partition(max_size, jobs=args.jobs, cap=cap)
    else:
        if max_size is None:
            max_size = _DEFAULT_MAX_SIZE[conjecture]
        if args.mode == "validity":
            report = verify.verify_validity(conjecture, max_size, jobs=args.jobs, cap=cap)
        elif args.mode == "sharpness":
            report = verify.verify_sharpness(conjecture, max_size, jobs=args.jobs, cap=cap)
        else:
            report = verify.verify_case_coverage(conjecture, max_size, jobs=args.jobs, cap=cap)

    data = report.to_json_bytes().decode() if args.format == "json" else report.to_text()
    _write_output(args.out, data)
    return 0 if report.passed else 1


def _cmd_witnesses(args: argparse.Namespace) -> int:
    conj_number = int(args.conjecture)
    failures = 0
    for fixture in WITNESSES_BY_CONJECTURE[conj_number]:
        try:
            verify.check_fixture(fixture)
            status = "ok"
        except FixtureMismatch as exc:
            status = f"FAILED ({exc})"
            failures += 1
        expected = " ".join(f"{k}={v}" for k, v in sorted(fixture.expected.items()))
        print(f"case {fixture.case.label}: arcs={fixture.digraph.arc_list()} "
              f"{expected} bound={fixture.expected_bound} "
              f"({CONJECTURE_LHS[conj_number]} from {', '.join(CONJECTURE_PARAMS[conj_number])}) "
              f"check={status}")
    return 1 if failures else 0


def _cmd_dot(args: argparse.Namespace) -> int:
    doc = parse_document(_read_input(args.file), kind="digraph")
    sys.stdout.write(to_dot(doc.payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharpbound",
        description="Digraph, rooted-tree and partition characteristics, "
        "bound evaluation, and exhaustive verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="print the characteristics of an instance")
    p_inv.add_argument("file", nargs="?", default="-", help="input path, - for stdin")
    p_inv.add_argument("--kind", choices=("auto", "digraph", "rooted_tree", "partition"), default="auto")
    p_inv.add_argument("--format", choices=("table", "json"), default="table")
    p_inv.set_defaults(func=_cmd_invariants)

    p_bound = sub.add_parser("bound", help="evaluate a bound from raw characteristics")
    p_bound.add_argument("conjecture", choices=tuple(_CONJ_ALIASES))
    for name in ("v", "c", "s", "ccmax", "ccmin", "sccmax", "sccmin",
                 "n", "dmin", "dmax", "np", "mmin", "mmax", "mdiff"):
        p_bound.add_argument(f"--{name}", type=int, default=None)
    p_bound.add_argument("--format", choices=("table", "json"), default="table")
    p_bound.set_defaults(func=_cmd_bound)

    p_verify = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p_verify.add_argument("--conj", dest="conjecture", choices=tuple(_CONJ_ALIASES), default=None)
    p_verify.add_argument("--mode", choices=("validity", "sharpness", "cases", "tree-partition"),
                          default="validity")
    p_verify.add_argument("--max-n", type=int, default=None, help="largest instance size to sweep")
    p_verify.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical for any value)")
    p_verify.add_argument("--format", choices=("table", "json"), default="table")
    p_verify.add_argument("--out", default=None, help="write the report here instead of stdout")
    p_verify.add_argument("--force-cap", action="store_true",
                          help="allow --max-n beyond the built-in enumeration cap")
    p_verify.set_defaults(func=_cmd_verify)

    p_wit = sub.add_parser("witnesses", help="print and re-check the built-in case witnesses")
    p_wit.add_argument("--conj", dest="conjecture", choices=("1", "3", "4"), required=True)
    p_wit.set_defaults(func=_cmd_witnesses)

    p_dot = sub.add_parser("dot", help="emit GraphViz DOT for a digraph document")
    p_dot.add_argument("file", nargs="?", default="-", help="input path, - for stdin")
    p_dot.set_defaults(func=_cmd_dot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        return _fail(str(exc))
    except (ValueError, OSError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
