"""Evaluators for the five conjectured sharp bounds and their case splits.

Every evaluator takes raw characteristic integers, so it can be driven by
an enumeration sweep or by CLI input with no graph attached.  Arithmetic
is exact: ``ceil_div``/``floor_div`` are defined for non-negative numerators
and positive divisors only, and every numerator is validated before the
division.  The conditional ``(cond ? x : y)`` and the 0/1 indicator
``[cond]`` used throughout the formulas are spelled out as plain Python.

Conjectures 1, 3 and 4 also come with a case classifier that unfolds the
formula into mutually exclusive simplified cases.  Conditions are numbered
per conjecture:

* conjecture 1 - cond1: ``v % cc_max == 0``; cond2: ``scc_min`` at least
  ``v % cc_max`` (``cc_max`` when the remainder is 0); cond3:
  ``2 * scc_min <= cc_max``.
* conjecture 3 - cond1: ``v == scc_min``; cond2: ``s == 1``.
* conjecture 4 - cond1: ``v == c * cc_min``; cond2:
  ``scc_max >= ceil((v - cc_min) / (c - 1))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraphs import DigraphCharacteristics

CONDITION_TEXT: dict[int, tuple[str, ...]] = {
    1: (
        "vertex count is a multiple of the largest connected component size",
        "smallest SCC size covers the division remainder (the full component size on an even split)",
        "two copies of the smallest SCC fit inside the largest connected component",
    ),
    3: (
        "the smallest SCC spans all vertices",
        "there is a single SCC",
    ),
    4: (
        "every connected component has the size of the smallest one",
        "largest SCC size reaches ceil((v - cc_min) / (c - 1))",
    ),
}

# Feasible sign assignments, in case-table order.  None marks a condition
# whose value does not matter for the case.
_FEASIBLE_SIGNS: dict[int, tuple[tuple[bool | None, ...], ...]] = {
    1: (
        (True, True, False),
        (True, False, True),
        (True, False, False),
        (False, True, True),
        (False, True, False),
        (False, False, True),
        (False, False, False),
    ),
    3: ((True, True), (False, False)),
    4: ((True, None), (False, True), (False, False)),
}


def iverson(cond: bool) -> int:
    """0/1 indicator of a condition."""
    return 1 if cond else 0


def floor_div(a: int, b: int) -> int:
    """``a // b`` restricted to ``a >= 0`` and ``b >= 1``."""
    if a < 0 or b < 1:
        raise ValueError(f"floor_div requires a >= 0 and b >= 1, got ({a}, {b})")
    return a // b


def ceil_div(a: int, b: int) -> int:
    """``(a + b - 1) // b`` restricted to ``a >= 0`` and ``b >= 1``."""
    if a < 0 or b < 1:
        raise ValueError(f"ceil_div requires a >= 0 and b >= 1, got ({a}, {b})")
    return (a + b - 1) // b


@dataclass(frozen=True)
class CaseId:
    """One feasible case of a conjecture's case unfolding.

    ``signs[i]`` is the truth value of condition ``i + 1`` for that
    conjecture; ``None`` means the condition is irrelevant to the case.
    """

    conjecture: int
    signs: tuple[bool | None, ...]

    def __post_init__(self) -> None:
        feasible = _FEASIBLE_SIGNS.get(self.conjecture)
        if feasible is None:
            raise ValueError(f"no case table for conjecture {self.conjecture}")
        if self.signs not in feasible:
            raise ValueError(
                f"infeasible case for conjecture {self.conjecture}: {_render_signs(self.signs)}"
            )

    @property
    def label(self) -> str:
        """Compact sign string, e.g. ``+1-2-3`` (irrelevant conditions omitted)."""
        return _render_signs(self.signs)


def _render_signs(signs: tuple[bool | None, ...]) -> str:
    return "".join(
        f"{'+' if value else '-'}{i}" for i, value in enumerate(signs, start=1) if value is not None
    )


def feasible_cases(conjecture: int) -> tuple[CaseId, ...]:
    """All feasible cases of a conjecture, in case-table order."""
    if conjecture not in _FEASIBLE_SIGNS:
        raise ValueError(f"no case table for conjecture {conjecture}")
    return tuple(CaseId(conjecture, signs) for signs in _FEASIBLE_SIGNS[conjecture])


@dataclass(frozen=True)
class LeafInterval:
    """Closed integer interval for a tree's leaf count.

    ``lower > upper`` is possible for characteristic combinations no tree
    realizes; the interval is then empty.
    """

    lower: int
    upper: int

    @property
    def is_empty(self) -> bool:
        return self.lower > self.upper

    def __contains__(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def _require(cond: bool, detail: str) -> None:
    if not cond:
        raise ValueError(f"inconsistent characteristics: {detail}")


def conj1_bound(v: int, cc_max: int, scc_min: int) -> int:
    """Lower bound on the number of connected components.

    ``ceil(v / cc_max)`` plus 1 exactly when neither ``2*scc_min <= cc_max``
    nor ``scc_min >= (v % cc_max or cc_max)`` holds.
    """
    _require(1 <= scc_min <= cc_max <= v, f"require 1 <= scc_min <= cc_max <= v, got ({v}, {cc_max}, {scc_min})")
    remainder = cc_max if v % cc_max == 0 else v % cc_max
    extra = iverson(not (2 * scc_min <= cc_max or scc_min >= remainder))
    return ceil_div(v, cc_max) + extra


def _conj1_conditions(v: int, cc_max: int, scc_min: int) -> tuple[bool, bool, bool]:
    remainder = cc_max if v % cc_max == 0 else v % cc_max
    return (v % cc_max == 0, scc_min >= remainder, 2 * scc_min <= cc_max)


# Offset added to floor(v / cc_max) in each simplified case.
_CONJ1_OFFSETS: dict[tuple[bool | None, ...], int] = {
    (True, True, False): 0,
    (True, False, True): 0,
    (True, False, False): 1,
    (False, True, True): 1,
    (False, True, False): 1,
    (False, False, True): 1,
    (False, False, False): 2,
}


def conj1_case(v: int, cc_max: int, scc_min: int) -> tuple[CaseId, int]:
    """Classify the inputs into one of the seven simplified cases.

    Returns the case and its simplified bound ``floor(v / cc_max) + k``
    with ``k`` in {0, 1, 2}.  The all-true assignment cannot arise from a
    digraph and is rejected as inconsistent input.
    """
    _require(1 <= scc_min <= cc_max <= v, f"require 1 <= scc_min <= cc_max <= v, got ({v}, {cc_max}, {scc_min})")
    signs = _conj1_conditions(v, cc_max, scc_min)
    if signs == (True, True, True):
        raise ValueError("infeasible case for conjecture 1: +1+2+3")
    case = CaseId(1, signs)
    return case, floor_div(v, cc_max) + _CONJ1_OFFSETS[signs]


def conj2_bound(s: int, cc_max: int, scc_min: int) -> int:
    """Lower bound on the number of connected components, from the SCC count.

    A connected component holds at most ``floor(cc_max / scc_min)`` SCCs, so
    spreading ``s`` SCCs needs at least ``ceil(s / floor(cc_max / scc_min))``
    components.
    """
    _require(1 <= scc_min <= cc_max, f"require 1 <= scc_min <= cc_max, got ({cc_max}, {scc_min})")
    _require(s >= 1, f"require s >= 1, got {s}")
    return ceil_div(s, floor_div(cc_max, scc_min))


def conj3_bound(v: int, s: int, scc_min: int) -> int:
    """Lower bound on the largest SCC size.

    ``ceil((v if v == scc_min else v - scc_min) / (s - 1 + [s == 1]))``.
    The raw evaluator does not require ``v == scc_min`` and ``s == 1`` to
    agree; only the case classifier rejects mixed assignments.
    """
    _require(1 <= scc_min <= v, f"require 1 <= scc_min <= v, got ({v}, {scc_min})")
    _require(1 <= s <= v, f"require 1 <= s <= v, got ({v}, {s})")
    numerator = v if v == scc_min else v - scc_min
    return ceil_div(numerator, s - 1 + iverson(s == 1))


def conj3_case(v: int, s: int, scc_min: int) -> tuple[CaseId, int]:
    """Classify into the two feasible cases of the largest-SCC bound.

    A digraph satisfies ``v == scc_min`` exactly when it has a single SCC,
    so the mixed assignments signal inconsistent inputs.
    """
    _require(1 <= scc_min <= v, f"require 1 <= scc_min <= v, got ({v}, {scc_min})")
    _require(1 <= s <= v, f"require 1 <= s <= v, got ({v}, {s})")
    spans, single = v == scc_min, s == 1
    if spans != single:
        raise ValueError(
            f"infeasible case for conjecture 3: {_render_signs((spans, single))}"
        )
    if spans:
        return CaseId(3, (True, True)), v
    return CaseId(3, (False, False)), ceil_div(v - scc_min, s - 1)


def conj4_bound(v: int, c: int, cc_min: int, scc_max: int) -> int:
    """Lower bound on the largest connected component size.

    ``cc_min`` when all components share the minimum size, otherwise
    ``max(scc_max, ceil((v - cc_min) / (c - 1)))``.
    """
    _require(cc_min >= 1, f"require cc_min >= 1, got {cc_min}")
    _require(c >= 1, f"require c >= 1, got {c}")
    _require(scc_max >= 1, f"require scc_max >= 1, got {scc_max}")
    _require(c * cc_min <= v, f"require c * cc_min <= v, got ({v}, {c}, {cc_min})")
    if v == c * cc_min:
        return cc_min
    _require(c >= 2, f"v != c * cc_min forces c >= 2, got ({v}, {c}, {cc_min})")
    return max(scc_max, ceil_div(v - cc_min, c - 1))


def conj4_case(v: int, c: int, cc_min: int, scc_max: int) -> tuple[CaseId, int]:
    """Classify into the three feasible cases of the largest-component bound."""
    _require(cc_min >= 1, f"require cc_min >= 1, got {cc_min}")
    _require(c >= 1, f"require c >= 1, got {c}")
    _require(scc_max >= 1, f"require scc_max >= 1, got {scc_max}")
    _require(c * cc_min <= v, f"require c * cc_min <= v, got ({v}, {c}, {cc_min})")
    if v == c * cc_min:
        return CaseId(4, (True, None)), cc_min
    _require(c >= 2, f"v != c * cc_min forces c >= 2, got ({v}, {c}, {cc_min})")
    threshold = ceil_div(v - cc_min, c - 1)
    if scc_max >= threshold:
        return CaseId(4, (False, True)), scc_max
    return CaseId(4, (False, False)), threshold


def partition_nval_upper(n_p: int, m_min: int, m_diff: int) -> int:
    """Upper bound on the number of distinct values of a sequence.

    ``floor((n_p - m_diff) / m_min)``.
    """
    _require(m_min >= 1, f"require m_min >= 1, got {m_min}")
    _require(m_diff >= 0, f"require m_diff >= 0, got {m_diff}")
    _require(n_p >= m_min + m_diff, f"require n_p >= m_min + m_diff, got ({n_p}, {m_min}, {m_diff})")
    return floor_div(n_p - m_diff, m_min)


def partition_nval_lower(n_p: int, m_max: int, m_diff: int) -> int:
    """Lower bound on the number of distinct values of a sequence.

    ``ceil((n_p + m_diff) / m_max)``.
    """
    _require(m_max >= 1, f"require m_max >= 1, got {m_max}")
    _require(0 <= m_diff < m_max, f"require 0 <= m_diff < m_max, got ({m_max}, {m_diff})")
    _require(n_p >= m_max, f"require n_p >= m_max, got ({n_p}, {m_max})")
    return ceil_div(n_p + m_diff, m_max)


def tree_leaf_interval(n: int, d_min: int, d_max: int) -> LeafInterval:
    """Sharp enclosure of the leaf count of a rooted tree.

    ``[1, 1]`` for the single-vertex tree, otherwise
    ``[ceil((n*d_min + d_max - d_min - n + 1) / d_min),
       floor((n*d_max + d_min - d_max - n + 1) / d_max)]``.
    """
    _require(n >= 1, f"require n >= 1, got {n}")
    if d_min == 0:
        _require(n == 1 and d_max == 0, f"d_min = 0 only for the single-vertex tree, got ({n}, {d_min}, {d_max})")
        return LeafInterval(1, 1)
    _require(n >= 2, f"d_min > 0 requires n >= 2, got ({n}, {d_min}, {d_max})")
    _require(1 <= d_min <= d_max <= n - 1, f"require 1 <= d_min <= d_max <= n - 1, got ({n}, {d_min}, {d_max})")
    lower = ceil_div(n * d_min + d_max - d_min - n + 1, d_min)
    upper = floor_div(n * d_max + d_min - d_max - n + 1, d_max)
    return LeafInterval(lower, upper)


# Thin adapters over the digraph characteristics record.

def conj1_bound_of(ch: DigraphCharacteristics) -> int:
    return conj1_bound(ch.v, ch.cc_max, ch.scc_min)


def conj2_bound_of(ch: DigraphCharacteristics) -> int:
    return conj2_bound(ch.s, ch.cc_max, ch.scc_min)


def conj3_bound_of(ch: DigraphCharacteristics) -> int:
    return conj3_bound(ch.v, ch.s, ch.scc_min)


def conj4_bound_of(ch: DigraphCharacteristics) -> int:
    return conj4_bound(ch.v, ch.c, ch.cc_min, ch.scc_max)


def conj1_cc_max_monotonicity_counterexamples(max_v: int = 30) -> list[tuple[int, int, int]]:
    """Scan for (v, cc_max, scc_min) where growing cc_max raises the bound.

    Returns the triples (v, cc_max, scc_min) such that the bound at
    ``cc_max + 1`` exceeds the bound at ``cc_max``.  Empty on the scanned
    range; kept as a callable report so a regression is visible data, not
    a silent assumption.
    """
    found = []
    for v in range(1, max_v + 1):
        for scc_min in range(1, v + 1):
            for cc_max in range(scc_min, v):
                if conj1_bound(v, cc_max + 1, scc_min) > conj1_bound(v, cc_max, scc_min):
                    found.append((v, cc_max, scc_min))
    return found
