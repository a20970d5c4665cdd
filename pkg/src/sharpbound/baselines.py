"""Frozen attainment baselines for the bounds whose sharpness is open-ended.

For conjectures whose right-hand-side tuple pins the instance size, an
enumeration sweep at that size decides attainment outright.  For the
others a sweep can only report how many realized tuples meet their bound
with equality; the counts below were produced once by the enumeration
oracle at the default sweep sizes and act as a regression floor: later
runs must realize the same tuples and attain at least as many.

Regenerate with ``scripts/compute_baselines.py`` after any intentional
change to enumeration or characteristic extraction.
"""

from __future__ import annotations

# (conjecture, max_size) -> {"realized": tuples seen, "attained": tuples met with equality}
ATTAINMENT_BASELINES: dict[tuple[str, int], dict[str, int]] = {
    ("conj2", 4): {"realized": 18, "attained": 18},
    ("conj4", 4): {"realized": 22, "attained": 22},
    ("partition_upper", 12): {"realized": 136, "attained": 136},
    ("partition_lower", 12): {"realized": 136, "attained": 136},
}
