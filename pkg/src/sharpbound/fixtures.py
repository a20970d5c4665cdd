"""Reference witnesses for every case of the digraph bounds.

Each fixture is a concrete digraph that attains its bound with equality
and lands in a specific case of the case unfolding, together with the
characteristic values the instance is supposed to have.  They double as
coverage fallbacks for cases whose smallest witness is larger than the
default enumeration sweep (the two big conjecture-1 witnesses have 9 and
14 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import CaseId
from .digraphs import Arc, Digraph

# Characteristic names a conjecture's bound reads, and the name it bounds.
CONJECTURE_PARAMS: dict[int, tuple[str, ...]] = {
    1: ("v", "cc_max", "scc_min"),
    3: ("v", "s", "scc_min"),
    4: ("v", "c", "cc_min", "scc_max"),
}
CONJECTURE_LHS: dict[int, str] = {1: "c", 3: "scc_max", 4: "cc_max"}


@dataclass(frozen=True)
class WitnessFixture:
    """A digraph expected to land in ``case`` and meet its bound exactly.

    ``expected`` holds the characteristic values to reproduce: the bound's
    parameters plus the bounded characteristic, whose value must equal
    ``expected_bound``.
    """

    conjecture: int
    case: CaseId
    digraph: Digraph
    expected: dict[str, int]
    expected_bound: int


def _cycle(vertices: list[int]) -> set[Arc]:
    """Directed cycle through the vertices; a single vertex gets a self-loop."""
    if len(vertices) == 1:
        return {(vertices[0], vertices[0])}
    return {(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))}


def _path(vertices: list[int]) -> set[Arc]:
    return {(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)}


def _digraph(n: int, *arc_groups: set[Arc]) -> Digraph:
    arcs: set[Arc] = set()
    for group in arc_groups:
        arcs |= group
    return Digraph(n, frozenset(arcs))


_LOOP = _digraph(1, _cycle([0]))
_SINGLE_ARC = _digraph(2, _path([0, 1]))

CONJ1_WITNESSES: tuple[WitnessFixture, ...] = (
    WitnessFixture(
        conjecture=1,
        case=CaseId(1, (True, True, False)),
        digraph=_LOOP,
        expected={"v": 1, "cc_max": 1, "scc_min": 1, "c": 1},
        expected_bound=1,
    ),
    WitnessFixture(
        conjecture=1,
        case=CaseId(1, (True, False, True)),
        digraph=_SINGLE_ARC,
        expected={"v": 2, "cc_max": 2, "scc_min": 1, "c": 1},
        expected_bound=1,
    ),
    WitnessFixture(
        conjecture=1,
        case=CaseId(1, (True, False, False)),
        digraph=_digraph(9, _cycle([0, 1, 2]), _cycle([3, 4]), _cycle([5, 6]), _cycle([7, 8])),
        expected={"v": 9, "cc_max": 3, "scc_min": 2, "c": 4},
        expected_bound=4,
    ),
    WitnessFixture(
        conjecture=1,
        case=CaseId(1, (False, True, True)),
        digraph=_digraph(3, _path([0, 1]), _cycle([2])),
        expected={"v": 3, "cc_max": 2, "scc_min": 1, "c": 2},
        expected_bound=2,
    ),
    WitnessFixture(
        conjecture=1,
        case=CaseId(1, (False, True, False)),
        digraph=_digraph(5, _cycle([0, 1, 2]), _cycle([3, 4])),
        expected={"v": 5, "cc_max": 3, "scc_min": 2, "c": 2},
        expected_bound=2,
    ),
    WitnessFixture(
        conjecture=1,
        case=CaseId(1, (False, False, True)),
        digraph=_digraph(5, _path([0, 1, 2]), _path([3, 4])),
        expected={"v": 5, "cc_max": 3, "scc_min": 1, "c": 2},
        expected_bound=2,
    ),
    WitnessFixture(
        conjecture=1,
        case=CaseId(1, (False, False, False)),
        digraph=_digraph(
            14,
            _cycle([0, 1, 2, 3, 4]),
            _cycle([5, 6, 7]),
            _cycle([8, 9, 10]),
            _cycle([11, 12, 13]),
        ),
        expected={"v": 14, "cc_max": 5, "scc_min": 3, "c": 4},
        expected_bound=4,
    ),
)

CONJ3_WITNESSES: tuple[WitnessFixture, ...] = (
    WitnessFixture(
        conjecture=3,
        case=CaseId(3, (True, True)),
        digraph=_LOOP,
        expected={"v": 1, "s": 1, "scc_min": 1, "scc_max": 1},
        expected_bound=1,
    ),
    WitnessFixture(
        conjecture=3,
        case=CaseId(3, (False, False)),
        digraph=_SINGLE_ARC,
        expected={"v": 2, "s": 2, "scc_min": 1, "scc_max": 1},
        expected_bound=1,
    ),
)

CONJ4_WITNESSES: tuple[WitnessFixture, ...] = (
    WitnessFixture(
        conjecture=4,
        case=CaseId(4, (True, None)),
        digraph=_LOOP,
        expected={"v": 1, "c": 1, "cc_min": 1, "scc_max": 1, "cc_max": 1},
        expected_bound=1,
    ),
    WitnessFixture(
        conjecture=4,
        case=CaseId(4, (False, True)),
        digraph=_digraph(5, _cycle([0, 1, 2]), _cycle([3]), _cycle([4])),
        expected={"v": 5, "c": 3, "cc_min": 1, "scc_max": 3, "cc_max": 3},
        expected_bound=3,
    ),
    WitnessFixture(
        conjecture=4,
        case=CaseId(4, (False, False)),
        digraph=_digraph(3, _path([0, 1]), _cycle([2])),
        expected={"v": 3, "c": 2, "cc_min": 1, "scc_max": 1, "cc_max": 2},
        expected_bound=2,
    ),
)

WITNESSES_BY_CONJECTURE: dict[int, tuple[WitnessFixture, ...]] = {
    1: CONJ1_WITNESSES,
    3: CONJ3_WITNESSES,
    4: CONJ4_WITNESSES,
}

ALL_WITNESSES: tuple[WitnessFixture, ...] = CONJ1_WITNESSES + CONJ3_WITNESSES + CONJ4_WITNESSES


def fixture_for_case(conjecture: int, case: CaseId) -> WitnessFixture | None:
    for fixture in WITNESSES_BY_CONJECTURE.get(conjecture, ()):
        if fixture.case == case:
            return fixture
    return None
