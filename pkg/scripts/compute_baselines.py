#!/usr/bin/env python3
"""Recompute the attainment baselines and diff them against the stored ones.

Prints the dictionary literal to paste into ``sharpbound/baselines.py``
if an intentional change to enumeration or characteristic extraction
shifts the counts.  Exits 1 when the recomputed numbers disagree with
the stored baselines.
"""

from __future__ import annotations

import argparse
import sys

from sharpbound import verify as V
from sharpbound.baselines import ATTAINMENT_BASELINES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    recomputed: dict[tuple[str, int], dict[str, int]] = {}
    for conjecture, size in ATTAINMENT_BASELINES or [
        ("conj2", 4), ("conj4", 4), ("partition_upper", 12), ("partition_lower", 12)
    ]:
        report = V.verify_sharpness(conjecture, size, jobs=args.jobs)
        recomputed[(conjecture, size)] = {
            "realized": report.attainment["realized"],
            "attained": report.attainment["attained"],
        }

    print("ATTAINMENT_BASELINES = {")
    for key in sorted(recomputed):
        print(f"    {key!r}: {recomputed[key]!r},")
    print("}")

    if recomputed != ATTAINMENT_BASELINES:
        print("recomputed baselines differ from sharpbound/baselines.py", file=sys.stderr)
        return 1
    print("stored baselines confirmed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
