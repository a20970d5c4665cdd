#!/usr/bin/env python3
"""Run the full verification battery and write one JSON report per sweep.

Default sizes match the acceptance suite (digraphs to 4, trees to 7,
partitions to 12).  ``--digraph-max 5`` runs the extended sweep over all
2^25 arc subsets; expect a few minutes per digraph conjecture at
``--jobs 1``, divided across workers otherwise.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from sharpbound import verify as V

DIGRAPH_CONJECTURES = ("conj1", "conj2", "conj3", "conj4")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports", help="directory for the JSON reports")
    parser.add_argument("--digraph-max", type=int, default=4)
    parser.add_argument("--tree-max", type=int, default=7)
    parser.add_argument("--partition-max", type=int, default=12)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    runs = []
    for conjecture in DIGRAPH_CONJECTURES:
        runs.append(("validity", conjecture, args.digraph_max))
        runs.append(("sharpness", conjecture, args.digraph_max))
    for conjecture in V.CASE_CONJECTURES:
        runs.append(("cases", conjecture, args.digraph_max))
    runs.append(("validity", "conj5", args.tree_max))
    runs.append(("sharpness", "conj5", args.tree_max))
    runs.append(("tree_partition", "conj5", args.tree_max))
    for conjecture in ("partition_upper", "partition_lower"):
        runs.append(("validity", conjecture, args.partition_max))
        runs.append(("sharpness", conjecture, args.partition_max))

    failures = 0
    for mode, conjecture, size in runs:
        if mode == "validity":
            report = V.verify_validity(conjecture, size, jobs=args.jobs)
        elif mode == "sharpness":
            report = V.verify_sharpness(conjecture, size, jobs=args.jobs)
        elif mode == "cases":
            report = V.verify_case_coverage(conjecture, size, jobs=args.jobs)
        else:
            report = V.cross_check_tree_partition(size, jobs=args.jobs)
        path = out_dir / f"{conjecture}-{mode}.json"
        path.write_bytes(report.to_json_bytes())
        verdict = "pass" if report.passed else "FAIL"
        print(f"{conjecture:17s} {mode:14s} size<={size:2d} "
              f"instances={report.instances_checked:8d} {verdict}  -> {path}")
        failures += 0 if report.passed else 1

    if failures:
        print(f"{failures} sweep(s) failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
