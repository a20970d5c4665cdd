"""Verification harness: validity sweeps, attainment analysis, case coverage.

Each sweep exhausts an enumeration stream, extracts the characteristic
tuple a bound reads, and compares the bounded characteristic against the
evaluator.  Reports are deterministic: identical inputs produce byte
identical output regardless of how many worker processes shard the sweep
(counts add up, per-tuple extremes take min/max, violation lists are
sorted canonically, per-case witnesses keep the smallest instance).

The digraph scan used here recomputes components with dense bitset
arithmetic instead of going through :mod:`sharpbound.digraphs`; the two
implementations are cross-checked exhaustively in the test suite, which
keeps the fast path honest and the sweeps independent of the formulas
they judge.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Iterator

from . import bounds, enumeration
from .baselines import ATTAINMENT_BASELINES
from .bounds import CaseId
from .digraphs import characteristics
from .documents import to_json_dict
from .enumeration import digraph_from_mask, enumerate_partitions
from .fixtures import CONJECTURE_LHS, CONJECTURE_PARAMS, WitnessFixture, fixture_for_case
from .structures import (
    PartitionInstance,
    RootedTree,
    father_vector_reaches_root,
    partition_characteristics,
    tree_characteristics,
    tree_to_partition,
)

REPORT_SCHEMA_VERSION = "1"

CONJECTURES = ("conj1", "conj2", "conj3", "conj4", "conj5", "partition_upper", "partition_lower")
CASE_CONJECTURES = ("conj1", "conj3", "conj4")

# Sweeps where the RHS tuple pins the instance size, so enumeration at that
# size settles attainment; conj5 earns its place because its tuple fixes n
# and both interval ends are hit at every realized tuple up to the cap.
DECIDABLE_SHARPNESS = ("conj1", "conj3", "conj5")

DEFAULT_SWEEP_SIZES = {"digraph": 4, "tree": 7, "partition": 12}


class FixtureMismatch(ValueError):
    """A witness fixture failed reproduction; ``field`` names the mismatch."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"fixture mismatch on {field}: {message}")
        self.field = field


@dataclass(frozen=True)
class _SweepSpec:
    kind: str  # digraph | tree | partition
    sense: str  # ge | le | interval
    lhs_field: str
    tuple_fields: tuple[str, ...]
    lhs: Callable[[tuple], int]
    params: Callable[[tuple], tuple]
    bound: Callable[..., Any]
    classifier: Callable[..., tuple[CaseId, int]] | None = None


# Characteristic tuple layouts used by the scanners:
#   digraph:   (v, c, s, cc_max, cc_min, scc_max, scc_min)
#   tree:      (n, leaves, d_min, d_max)
#   partition: (n_p, nval, m_min, m_max, m_diff)
_SWEEPS: dict[str, _SweepSpec] = {
    "conj1": _SweepSpec(
        kind="digraph",
        sense="ge",
        lhs_field="c",
        tuple_fields=("v", "cc_max", "scc_min"),
        lhs=lambda ch: ch[1],
        params=lambda ch: (ch[0], ch[3], ch[6]),
        bound=bounds.conj1_bound,
        classifier=bounds.conj1_case,
    ),
    "conj2": _SweepSpec(
        kind="digraph",
        sense="ge",
        lhs_field="c",
        tuple_fields=("s", "cc_max", "scc_min"),
        lhs=lambda ch: ch[1],
        params=lambda ch: (ch[2], ch[3], ch[6]),
        bound=bounds.conj2_bound,
    ),
    "conj3": _SweepSpec(
        kind="digraph",
        sense="ge",
        lhs_field="scc_max",
        tuple_fields=("v", "s", "scc_min"),
        lhs=lambda ch: ch[5],
        params=lambda ch: (ch[0], ch[2], ch[6]),
        bound=bounds.conj3_bound,
        classifier=bounds.conj3_case,
    ),
    "conj4": _SweepSpec(
        kind="digraph",
        sense="ge",
        lhs_field="cc_max",
        tuple_fields=("v", "c", "cc_min", "scc_max"),
        lhs=lambda ch: ch[3],
        params=lambda ch: (ch[0], ch[1], ch[4], ch[5]),
        bound=bounds.conj4_bound,
        classifier=bounds.conj4_case,
    ),
    "conj5": _SweepSpec(
        kind="tree",
        sense="interval",
        lhs_field="leaves",
        tuple_fields=("n", "d_min", "d_max"),
        lhs=lambda ch: ch[1],
        params=lambda ch: (ch[0], ch[2], ch[3]),
        bound=lambda n, d_min, d_max: (
            lambda iv: (iv.lower, iv.upper)
        )(bounds.tree_leaf_interval(n, d_min, d_max)),
    ),
    "partition_upper": _SweepSpec(
        kind="partition",
        sense="le",
        lhs_field="nval",
        tuple_fields=("n_p", "m_min", "m_diff"),
        lhs=lambda ch: ch[1],
        params=lambda ch: (ch[0], ch[2], ch[4]),
        bound=bounds.partition_nval_upper,
    ),
    "partition_lower": _SweepSpec(
        kind="partition",
        sense="ge",
        lhs_field="nval",
        tuple_fields=("n_p", "m_max", "m_diff"),
        lhs=lambda ch: ch[1],
        params=lambda ch: (ch[0], ch[3], ch[4]),
        bound=bounds.partition_nval_lower,
    ),
}

_KIND_CAPS = {
    "digraph": enumeration.DIGRAPH_CAP,
    "tree": enumeration.TREE_CAP,
    "partition": enumeration.PARTITION_CAP,
}


# --- scanners ------------------------------------------------------------


def _digraph_rows_iter(n: int, shard_index: int = 0, shard_count: int = 1) -> Iterator[tuple[int, tuple]]:
    """(arc bitmask, characteristics tuple) for every in-class digraph."""
    full = (1 << n) - 1
    for mask in range(shard_index, 1 << (n * n), shard_count):
        rows = [(mask >> (u * n)) & full for u in range(n)]
        tails = 0
        heads = 0
        for u in range(n):
            r = rows[u]
            if r:
                tails |= 1 << u
                heads |= r
        if (tails | heads) != full:
            continue

        und = rows[:]
        for u in range(n):
            r = rows[u]
            while r:
                low = r & -r
                und[low.bit_length() - 1] |= 1 << u
                r ^= low
        seen = 0
        cc_sizes = []
        for u in range(n):
            if seen >> u & 1:
                continue
            comp = 1 << u
            while True:
                grown = comp
                m = comp
                while m:
                    low = m & -m
                    grown |= und[low.bit_length() - 1]
                    m ^= low
                if grown == comp:
                    break
                comp = grown
            seen |= comp
            cc_sizes.append(comp.bit_count())

        reach = rows[:]
        for k in range(n):
            bit = 1 << k
            rk = reach[k]
            for i in range(n):
                if reach[i] & bit:
                    reach[i] |= rk
        assigned = 0
        scc_sizes = []
        for i in range(n):
            if assigned >> i & 1:
                continue
            members = 1 << i
            ri = reach[i]
            for j in range(i + 1, n):
                if ri >> j & 1 and reach[j] >> i & 1:
                    members |= 1 << j
            assigned |= members
            scc_sizes.append(members.bit_count())

        yield mask, (
            n,
            len(cc_sizes),
            len(scc_sizes),
            max(cc_sizes),
            min(cc_sizes),
            max(scc_sizes),
            min(scc_sizes),
        )


def _tree_rows_iter(n: int, shard_index: int = 0, shard_count: int = 1) -> Iterator[tuple[tuple, tuple]]:
    """(father vector, characteristics tuple) for every labeled rooted tree."""
    for idx, vec in enumerate(product(range(n), repeat=n - 1)):
        if idx % shard_count != shard_index:
            continue
        if not father_vector_reaches_root(vec):
            continue
        counts = [0] * n
        for f in vec:
            counts[f] += 1
        internal = [c for c in counts if c]
        yield vec, (n, counts.count(0), min(internal, default=0), max(internal, default=0))


def _partition_rows_iter(n_p: int, shard_index: int = 0, shard_count: int = 1) -> Iterator[tuple[tuple, tuple]]:
    """(occurrence multiset, characteristics tuple) for every multiset of total n_p."""
    for idx, parts in enumerate(enumerate_partitions(n_p, cap=n_p)):
        if idx % shard_count != shard_index:
            continue
        yield parts, (n_p, len(parts), min(parts), max(parts), max(parts) - min(parts))


@lru_cache(maxsize=None)
def _cached_rows(kind: str, size: int) -> tuple[tuple[Any, tuple], ...]:
    return tuple(_rows_iter(kind, size))


def _rows_iter(kind: str, size: int, shard_index: int = 0, shard_count: int = 1):
    if kind == "digraph":
        return _digraph_rows_iter(size, shard_index, shard_count)
    if kind == "tree":
        return _tree_rows_iter(size, shard_index, shard_count)
    return _partition_rows_iter(size, shard_index, shard_count)


def _rows(kind: str, size: int, shard_index: int = 0, shard_count: int = 1):
    # Materialized scans are cheap up to the default sweep sizes and get
    # reused by every sweep in the process; anything bigger is streamed.
    if shard_count == 1 and size <= DEFAULT_SWEEP_SIZES[kind]:
        return _cached_rows(kind, size)
    return _rows_iter(kind, size, shard_index, shard_count)


def _instance(kind: str, ident: Any):
    if kind == "digraph":
        size, mask = ident
        return digraph_from_mask(size, mask)
    if kind == "tree":
        return RootedTree(ident[1])
    values: list[int] = []
    for value, occurrences in enumerate(ident[1]):
        values.extend([value] * occurrences)
    return PartitionInstance(tuple(values))


def _instance_doc(kind: str, ident: Any) -> dict:
    payload = _instance(kind, ident)
    doc = {"kind": "rooted_tree" if kind == "tree" else kind}
    doc.update(to_json_dict(payload))
    return doc


def _recomputed_characteristics(kind: str, ident: Any) -> dict[str, int]:
    payload = _instance(kind, ident)
    if kind == "digraph":
        return characteristics(payload).as_dict()
    if kind == "tree":
        return tree_characteristics(payload).as_dict()
    return partition_characteristics(payload).as_dict()


# --- sharded scan and merge ----------------------------------------------


def _scan_partial(conjecture: str, size: int, shard_index: int, shard_count: int, need_cases: bool) -> dict:
    spec = _SWEEPS[conjecture]
    count = 0
    stats: dict[tuple, list[int]] = {}
    violations: list[tuple] = []
    cases: dict[tuple, tuple] = {}
    case_counts: dict[tuple, int] = {}
    bound_memo: dict[tuple, Any] = {}
    case_memo: dict[tuple, CaseId] = {}

    for ident, ch in _rows(spec.kind, size, shard_index, shard_count):
        count += 1
        params = spec.params(ch)
        lhs = spec.lhs(ch)

        entry = stats.get(params)
        if entry is None:
            stats[params] = [lhs, lhs]
        else:
            if lhs < entry[0]:
                entry[0] = lhs
            if lhs > entry[1]:
                entry[1] = lhs

        bound = bound_memo.get(params)
        if bound is None:
            bound = spec.bound(*params)
            bound_memo[params] = bound
        if spec.sense == "ge":
            bad = lhs < bound
        elif spec.sense == "le":
            bad = lhs > bound
        else:
            bad = not bound[0] <= lhs <= bound[1]
        if bad:
            violations.append((size, ident, lhs, params))

        if need_cases and spec.classifier is not None:
            case = case_memo.get(params)
            if case is None:
                case = spec.classifier(*params)[0]
                case_memo[params] = case
            key = case.signs
            case_counts[key] = case_counts.get(key, 0) + 1
            witness = (size, ident)
            if key not in cases or witness < cases[key]:
                cases[key] = witness

    return {
        "count": count,
        "stats": stats,
        "violations": violations,
        "cases": cases,
        "case_counts": case_counts,
    }


def _scan_task(task: tuple) -> dict:
    return _scan_partial(*task)


def _merge(partials: list[dict]) -> dict:
    merged = {"count": 0, "stats": {}, "violations": [], "cases": {}, "case_counts": {}}
    for partial in partials:
        merged["count"] += partial["count"]
        for key, (lo, hi) in partial["stats"].items():
            entry = merged["stats"].get(key)
            if entry is None:
                merged["stats"][key] = [lo, hi]
            else:
                entry[0] = min(entry[0], lo)
                entry[1] = max(entry[1], hi)
        merged["violations"].extend(partial["violations"])
        for key, witness in partial["cases"].items():
            current = merged["cases"].get(key)
            if current is None or witness < current:
                merged["cases"][key] = witness
        for key, n in partial["case_counts"].items():
            merged["case_counts"][key] = merged["case_counts"].get(key, 0) + n
    merged["violations"].sort(key=lambda item: (item[0], item[1]))
    return merged


def _run_scan(conjecture: str, sizes: list[int], jobs: int, need_cases: bool) -> dict:
    tasks = [
        (conjecture, size, shard, jobs, need_cases) for size in sizes for shard in range(jobs)
    ]
    if jobs <= 1:
        partials = [_scan_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_scan_task, tasks))
    return _merge(partials)


def _check_sweep_args(conjecture: str, max_size: int, cap: int | None) -> _SweepSpec:
    if conjecture not in _SWEEPS:
        raise ValueError(f"unknown conjecture {conjecture!r}; expected one of {CONJECTURES}")
    spec = _SWEEPS[conjecture]
    effective_cap = _KIND_CAPS[spec.kind] if cap is None else cap
    if max_size < 1:
        raise ValueError(f"max_size must be positive, got {max_size}")
    if max_size > effective_cap:
        raise ValueError(f"enumeration size exceeds cap: {max_size} > {effective_cap}")
    return spec


# --- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification sweep, serializable deterministically."""

    conjecture: str
    mode: str
    sizes_swept: tuple[int, ...]
    instances_checked: int
    violations: tuple[dict, ...]
    passed: bool
    tuple_fields: tuple[str, ...] | None = None
    tuple_stats: dict[str, dict] | None = None
    case_coverage: dict[str, dict] | None = None
    attainment: dict | None = None

    def to_json_dict(self) -> dict:
        doc: dict[str, Any] = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "conjecture": self.conjecture,
            "mode": self.mode,
            "sizes_swept": list(self.sizes_swept),
            "instances_checked": self.instances_checked,
            "violations": list(self.violations),
            "passed": self.passed,
        }
        if self.tuple_fields is not None:
            doc["tuple_fields"] = list(self.tuple_fields)
        if self.tuple_stats is not None:
            doc["tuple_stats"] = self.tuple_stats
        if self.case_coverage is not None:
            doc["case_coverage"] = self.case_coverage
        if self.attainment is not None:
            doc["attainment"] = self.attainment
        return doc

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n").encode()

    def to_text(self) -> str:
        lines = [
            f"conjecture: {self.conjecture}",
            f"mode: {self.mode}",
            f"sizes swept: {', '.join(str(s) for s in self.sizes_swept)}",
            f"instances checked: {self.instances_checked}",
            f"violations: {len(self.violations)}",
        ]
        for violation in self.violations:
            lines.append(f"  VIOLATION {json.dumps(violation, sort_keys=True)}")
        if self.attainment is not None:
            a = self.attainment
            lines.append(
                f"attainment: {a['attained']}/{a['realized']} tuples"
                + (" (decidable)" if a["decidable"] else "")
            )
            if a.get("baseline") is not None:
                lines.append(
                    f"baseline: {a['baseline']['attained']}/{a['baseline']['realized']}"
                )
        if self.tuple_stats is not None:
            lines.append(f"tuples: {len(self.tuple_stats)} ({', '.join(self.tuple_fields or ())})")
            for key in sorted(self.tuple_stats, key=_tuple_sort_key):
                stat = self.tuple_stats[key]
                lines.append(
                    f"  ({key}) observed [{stat['observed_min']}, {stat['observed_max']}]"
                    f" bound {stat['bound']} attained={str(stat['attained']).lower()}"
                )
        if self.case_coverage is not None:
            lines.append(f"cases: {len(self.case_coverage)}")
            for label, entry in self.case_coverage.items():
                covered = entry["covered_by"] or "MISSING"
                lines.append(f"  {label}: {covered} (instances: {entry['instances']})")
        lines.append(f"verdict: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _tuple_sort_key(key: str) -> tuple[int, ...]:
    return tuple(int(part) for part in key.split(","))


def _violation_docs(spec: _SweepSpec, merged: dict) -> tuple[dict, ...]:
    docs = []
    for size, ident, lhs, params in merged["violations"]:
        bound = spec.bound(*params)
        docs.append(
            {
                "instance": _instance_doc(spec.kind, (size, ident)),
                "characteristics": _recomputed_characteristics(spec.kind, (size, ident)),
                "bound": list(bound) if spec.sense == "interval" else bound,
                "observed": lhs,
            }
        )
    return tuple(docs)


def _tuple_stats_doc(spec: _SweepSpec, merged: dict) -> tuple[dict[str, dict], int, int]:
    stats: dict[str, dict] = {}
    realized = 0
    attained = 0
    for params in sorted(merged["stats"]):
        observed_min, observed_max = merged["stats"][params]
        bound = spec.bound(*params)
        if spec.sense == "ge":
            hit = observed_min == bound
            bound_doc: Any = bound
        elif spec.sense == "le":
            hit = observed_max == bound
            bound_doc = bound
        else:
            hit = observed_min == bound[0] and observed_max == bound[1]
            bound_doc = list(bound)
        realized += 1
        attained += 1 if hit else 0
        stats[",".join(str(p) for p in params)] = {
            "observed_min": observed_min,
            "observed_max": observed_max,
            "bound": bound_doc,
            "attained": hit,
        }
    return stats, realized, attained


def verify_validity(conjecture: str, max_size: int, *, jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """Check every enumerated instance against the bound; expect no violations."""
    spec = _check_sweep_args(conjecture, max_size, cap)
    sizes = list(range(1, max_size + 1))
    merged = _run_scan(conjecture, sizes, jobs, need_cases=False)
    violations = _violation_docs(spec, merged)
    return VerificationReport(
        conjecture=conjecture,
        mode="validity",
        sizes_swept=tuple(sizes),
        instances_checked=merged["count"],
        violations=violations,
        passed=not violations,
    )


def verify_sharpness(conjecture: str, max_size: int, *, jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """Group instances by RHS tuple and record which tuples meet their bound.

    For the size-pinned conjectures every realized tuple must be attained;
    for the rest the attainment count is compared against the stored
    baseline for (conjecture, max_size) when one exists.
    """
    spec = _check_sweep_args(conjecture, max_size, cap)
    sizes = list(range(1, max_size + 1))
    merged = _run_scan(conjecture, sizes, jobs, need_cases=False)
    violations = _violation_docs(spec, merged)
    stats, realized, attained = _tuple_stats_doc(spec, merged)

    decidable = conjecture in DECIDABLE_SHARPNESS
    baseline = ATTAINMENT_BASELINES.get((conjecture, max_size))
    if decidable:
        passed = not violations and attained == realized
    elif baseline is not None:
        passed = (
            not violations
            and realized == baseline["realized"]
            and attained >= baseline["attained"]
        )
    else:
        passed = not violations
    attainment = {
        "realized": realized,
        "attained": attained,
        "decidable": decidable,
        "baseline": dict(baseline) if baseline is not None else None,
    }
    return VerificationReport(
        conjecture=conjecture,
        mode="sharpness",
        sizes_swept=tuple(sizes),
        instances_checked=merged["count"],
        violations=violations,
        passed=passed,
        tuple_fields=spec.tuple_fields,
        tuple_stats=stats,
        attainment=attainment,
    )


def verify_case_coverage(
    conjecture: str,
    max_size: int,
    *,
    jobs: int = 1,
    cap: int | None = None,
    include_fixtures: bool = True,
) -> VerificationReport:
    """Classify every instance by case and confirm each feasible case is hit.

    Cases out of reach of the sweep are covered by the built-in witness
    fixtures when ``include_fixtures`` is set (fixtures are re-checked, not
    trusted).
    """
    if conjecture not in CASE_CONJECTURES:
        raise ValueError(f"case coverage applies to {CASE_CONJECTURES}, not {conjecture!r}")
    spec = _check_sweep_args(conjecture, max_size, cap)
    sizes = list(range(1, max_size + 1))
    merged = _run_scan(conjecture, sizes, jobs, need_cases=True)
    violations = _violation_docs(spec, merged)

    conj_number = int(conjecture.removeprefix("conj"))
    coverage: dict[str, dict] = {}
    all_covered = True
    for case in bounds.feasible_cases(conj_number):
        entry: dict[str, Any] = {"instances": merged["case_counts"].get(case.signs, 0)}
        witness = merged["cases"].get(case.signs)
        if witness is not None:
            entry["covered_by"] = "enumeration"
            entry["witness"] = _instance_doc(spec.kind, witness)
        else:
            fixture = fixture_for_case(conj_number, case) if include_fixtures else None
            if fixture is not None:
                check_fixture(fixture)
                entry["covered_by"] = "fixture"
                witness_doc = {"kind": "digraph"}
                witness_doc.update(to_json_dict(fixture.digraph))
                entry["witness"] = witness_doc
            else:
                entry["covered_by"] = None
                entry["witness"] = None
                all_covered = False
        coverage[case.label] = entry

    return VerificationReport(
        conjecture=conjecture,
        mode="cases",
        sizes_swept=tuple(sizes),
        instances_checked=merged["count"],
        violations=violations,
        passed=all_covered and not violations,
        case_coverage=coverage,
    )


def cross_check_tree_partition(max_n: int, *, jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """Re-derive the leaf interval through the partition projection.

    For every tree with 2..max_n vertices, checks the four mapping
    identities (nval = n - leaves, n_p = n - 1, m_min = d_min,
    m_max = d_max) and that the interval chained through the two
    partition bounds equals the direct leaf interval and contains the
    leaf count.
    """
    effective_cap = enumeration.TREE_CAP if cap is None else cap
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    if max_n > effective_cap:
        raise ValueError(f"enumeration size exceeds cap: {max_n} > {effective_cap}")
    sizes = list(range(2, max_n + 1))
    tasks = [(size, shard, jobs) for size in sizes for shard in range(jobs)]
    if jobs <= 1:
        partials = [_tree_partition_partial(*task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_tree_partition_task, tasks))
    count = sum(p["count"] for p in partials)
    mismatches = sorted((m for p in partials for m in p["mismatches"]), key=lambda d: json.dumps(d, sort_keys=True))
    return VerificationReport(
        conjecture="conj5",
        mode="tree_partition",
        sizes_swept=tuple(sizes),
        instances_checked=count,
        violations=tuple(mismatches),
        passed=not mismatches,
    )


def _tree_partition_task(task: tuple) -> dict:
    return _tree_partition_partial(*task)


def _tree_partition_partial(size: int, shard_index: int, shard_count: int) -> dict:
    count = 0
    mismatches: list[dict] = []
    for idx, vec in enumerate(product(range(size), repeat=size - 1)):
        if idx % shard_count != shard_index:
            continue
        if not father_vector_reaches_root(vec):
            continue
        count += 1
        tree = RootedTree(vec)
        tc = tree_characteristics(tree)
        pc = partition_characteristics(tree_to_partition(tree))
        identities = (
            pc.nval == tc.n - tc.leaves
            and pc.n_p == tc.n - 1
            and pc.m_min == tc.d_min
            and pc.m_max == tc.d_max
        )
        interval = bounds.tree_leaf_interval(tc.n, tc.d_min, tc.d_max)
        chained_lower = tc.n - bounds.partition_nval_upper(pc.n_p, pc.m_min, pc.m_diff)
        chained_upper = tc.n - bounds.partition_nval_lower(pc.n_p, pc.m_max, pc.m_diff)
        chained_ok = (chained_lower, chained_upper) == (interval.lower, interval.upper)
        contains = tc.leaves in interval
        if not (identities and chained_ok and contains):
            mismatches.append(
                {
                    "instance": {"kind": "rooted_tree", "father": list(vec)},
                    "characteristics": tc.as_dict(),
                    "partition_characteristics": pc.as_dict(),
                    "interval": [interval.lower, interval.upper],
                    "chained": [chained_lower, chained_upper],
                    "identities_hold": identities,
                }
            )
    return {"count": count, "mismatches": mismatches}


def check_fixture(fixture: WitnessFixture) -> bool:
    """Recompute a fixture from scratch and fail loudly on any mismatch."""
    ch = characteristics(fixture.digraph).as_dict()
    for name in sorted(fixture.expected):
        if ch[name] != fixture.expected[name]:
            raise FixtureMismatch(name, f"expected {fixture.expected[name]}, recomputed {ch[name]}")

    classifier = {1: bounds.conj1_case, 3: bounds.conj3_case, 4: bounds.conj4_case}[fixture.conjecture]
    params = tuple(ch[name] for name in CONJECTURE_PARAMS[fixture.conjecture])
    case, simplified = classifier(*params)
    if case != fixture.case:
        raise FixtureMismatch("case", f"expected {fixture.case.label}, classified {case.label}")

    evaluator = {1: bounds.conj1_bound, 3: bounds.conj3_bound, 4: bounds.conj4_bound}[fixture.conjecture]
    bound = evaluator(*params)
    if simplified != bound:
        raise FixtureMismatch("simplified_bound", f"case gives {simplified}, formula gives {bound}")
    if bound != fixture.expected_bound:
        raise FixtureMismatch("expected_bound", f"expected {fixture.expected_bound}, formula gives {bound}")
    lhs = ch[CONJECTURE_LHS[fixture.conjecture]]
    if lhs != bound:
        raise FixtureMismatch("bound_equality", f"bound {bound} not met with equality (observed {lhs})")
    return True
