"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside pytest's own verdicts.
"""

from __future__ import annotations

import time

from sharpbound import verify as V
from sharpbound.baselines import ATTAINMENT_BASELINES
from sharpbound.bounds import conj1_bound, conj1_case, conj3_bound, conj3_case, conj4_bound, conj4_case
from sharpbound.fixtures import ALL_WITNESSES

# Default sweep sizes: digraphs exhaust all 65,536 four-vertex arc subsets,
# trees all 16,807 seven-vertex father vectors, partitions every occurrence
# multiset with total at most 12.
DIGRAPH_MAX = 4
TREE_MAX = 7
PARTITION_MAX = 12


def _report(criterion: str, ok: bool) -> None:
    print(f"acceptance {criterion}: {'PASS' if ok else 'FAIL'}")
    assert ok, criterion


def test_criterion_1_fixture_reproduction():
    started = time.perf_counter()
    ok = True
    for fixture in ALL_WITNESSES:
        ok = ok and V.check_fixture(fixture)
    elapsed = time.perf_counter() - started
    ok = ok and len(ALL_WITNESSES) == 12 and elapsed < 1.0
    _report("criterion 1 (fixture reproduction, 12 witnesses, < 1s)", ok)


def test_criterion_2_validity_sweeps():
    started = time.perf_counter()
    sweeps = [
        ("conj1", DIGRAPH_MAX, 64060),
        ("conj2", DIGRAPH_MAX, 64060),
        ("conj3", DIGRAPH_MAX, 64060),
        ("conj4", DIGRAPH_MAX, 64060),
        ("conj5", TREE_MAX, 18249),
        ("partition_upper", PARTITION_MAX, 271),
        ("partition_lower", PARTITION_MAX, 271),
    ]
    ok = True
    for conjecture, size, expected_instances in sweeps:
        report = V.verify_validity(conjecture, size)
        ok = ok and report.passed and not report.violations
        ok = ok and report.instances_checked == expected_instances
    elapsed = time.perf_counter() - started
    ok = ok and elapsed < 60.0
    _report("criterion 2 (zero validity violations at default sweep sizes, < 1 min)", ok)


def test_criterion_3_case_unfolding_equivalence():
    ok = True
    seen_conj1_signs = set()
    for n in range(1, DIGRAPH_MAX + 1):
        for _, ch in V._rows("digraph", n):
            v, c, s, cc_max, cc_min, scc_max, scc_min = ch
            case1, simplified1 = conj1_case(v, cc_max, scc_min)  # raises on +1+2+3
            seen_conj1_signs.add(case1.signs)
            ok = ok and simplified1 == conj1_bound(v, cc_max, scc_min)
            case3, simplified3 = conj3_case(v, s, scc_min)  # raises on mixed signs
            ok = ok and simplified3 == conj3_bound(v, s, scc_min)
            case4, simplified4 = conj4_case(v, c, cc_min, scc_max)
            ok = ok and simplified4 == conj4_bound(v, c, cc_min, scc_max)
    ok = ok and (True, True, True) not in seen_conj1_signs
    _report("criterion 3 (simplified cases equal the formulas; infeasible cases absent)", ok)


def test_criterion_4_sharpness():
    ok = True
    for conjecture in ("conj1", "conj3"):
        report = V.verify_sharpness(conjecture, DIGRAPH_MAX)
        ok = ok and report.passed and report.attainment["attained"] == report.attainment["realized"]
    for conjecture, size in (
        ("conj2", DIGRAPH_MAX),
        ("conj4", DIGRAPH_MAX),
        ("partition_upper", PARTITION_MAX),
        ("partition_lower", PARTITION_MAX),
    ):
        report = V.verify_sharpness(conjecture, size)
        baseline = ATTAINMENT_BASELINES[(conjecture, size)]
        ok = ok and report.attainment["realized"] == baseline["realized"]
        ok = ok and report.attainment["attained"] >= baseline["attained"]
        ok = ok and report.passed
    _report("criterion 4 (conj1/conj3 fully attained; others at or above baseline)", ok)


def test_criterion_5_tree_partition_mapping():
    report = V.cross_check_tree_partition(TREE_MAX)
    expected_trees = sum(n ** (n - 2) for n in range(2, TREE_MAX + 1))
    ok = report.passed and not report.violations and report.instances_checked == expected_trees
    _report("criterion 5 (mapping identities and chained interval, all trees n <= 7)", ok)


def test_criterion_6_report_determinism():
    builders = [
        lambda jobs: V.verify_validity("conj1", DIGRAPH_MAX, jobs=jobs),
        lambda jobs: V.verify_sharpness("conj3", DIGRAPH_MAX, jobs=jobs),
        lambda jobs: V.verify_case_coverage("conj4", DIGRAPH_MAX, jobs=jobs),
        lambda jobs: V.cross_check_tree_partition(5, jobs=jobs),
    ]
    ok = True
    for build in builders:
        solo = build(1).to_json_bytes()
        ok = ok and solo == build(1).to_json_bytes()  # repeat run
        ok = ok and solo == build(2).to_json_bytes()  # sharded run
    _report("criterion 6 (reports byte-identical across runs and --jobs)", ok)
