"""Partition sequences, rooted trees, and the projection between them.

A partition instance is any finite integer sequence; its characteristics
depend only on how often each distinct value occurs.  A rooted tree is
stored as its father vector: entry ``j - 1`` is the father of vertex ``j``,
vertex 0 is the root.  Dropping the root turns the father vector into a
partition instance, which is exactly the tree-to-partition mapping used by
the leaf-count bound.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class PartitionInstance:
    """A non-empty integer sequence."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(x) for x in self.values)
        if not values:
            raise ValueError("empty sequence")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class PartitionCharacteristics:
    """Length, distinct-value count, and occurrence extremes of a sequence.

    ``m_min``/``m_max`` count the occurrences of the least and most frequent
    value; ``m_diff`` is their difference.
    """

    n_p: int
    nval: int
    m_min: int
    m_max: int
    m_diff: int

    def __post_init__(self) -> None:
        ok = (
            self.m_diff == self.m_max - self.m_min >= 0
            and 1 <= self.m_min <= self.m_max <= self.n_p
            and self.nval * self.m_min <= self.n_p <= self.nval * self.m_max
        )
        if not ok:
            raise ValueError(
                "inconsistent characteristics: "
                f"(n_p={self.n_p}, nval={self.nval}, m_min={self.m_min}, "
                f"m_max={self.m_max}, m_diff={self.m_diff})"
            )

    def as_dict(self) -> dict[str, int]:
        return {
            "n_p": self.n_p,
            "nval": self.nval,
            "m_min": self.m_min,
            "m_max": self.m_max,
            "m_diff": self.m_diff,
        }


def partition_characteristics(p: PartitionInstance) -> PartitionCharacteristics:
    """Characteristics of a partition instance from its occurrence counts."""
    counts = Counter(p.values)
    occurrences = counts.values()
    m_min = min(occurrences)
    m_max = max(occurrences)
    return PartitionCharacteristics(
        n_p=len(p.values),
        nval=len(counts),
        m_min=m_min,
        m_max=m_max,
        m_diff=m_max - m_min,
    )


def father_vector_reaches_root(father: Sequence[int]) -> bool:
    """True iff every vertex's father chain terminates at vertex 0."""
    n = len(father) + 1
    for start in range(1, n):
        j = start
        steps = 0
        while j != 0:
            j = father[j - 1]
            steps += 1
            if steps >= n:  # revisit guaranteed: a cycle
                return False
    return True


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree as a father vector; vertex 0 is the root.

    ``father[j - 1]`` is the father of vertex ``j`` for ``j`` in
    ``1 .. node_count - 1``.  The single-vertex tree has an empty vector.
    """

    father: tuple[int, ...]

    def __post_init__(self) -> None:
        father = tuple(int(x) for x in self.father)
        object.__setattr__(self, "father", father)
        n = len(father) + 1
        for j, f in enumerate(father, start=1):
            if not 0 <= f < n:
                raise ValueError(f"father of vertex {j} is {f}, outside [0, {n})")
        if not father_vector_reaches_root(father):
            raise ValueError("not a tree")

    @property
    def node_count(self) -> int:
        return len(self.father) + 1

    def father_of(self, j: int) -> int:
        if not 1 <= j < self.node_count:
            raise ValueError(f"vertex {j} has no father")
        return self.father[j - 1]

    def child_counts(self) -> list[int]:
        """Number of children of each vertex, indexed by vertex."""
        counts = [0] * self.node_count
        for f in self.father:
            counts[f] += 1
        return counts


@dataclass(frozen=True)
class RootedTreeCharacteristics:
    """Vertex count, leaf count, and child-count extremes of a rooted tree.

    ``d_min`` ranges over vertices with at least one child (0 only for the
    single-vertex tree); ``d_max`` over all vertices.
    """

    n: int
    leaves: int
    d_min: int
    d_max: int

    def __post_init__(self) -> None:
        single = self.n == 1
        ok = (
            (single == (self.d_min == 0) == (self.d_max == 0))
            and self.leaves >= 1
            and (single or 1 <= self.d_min <= self.d_max <= self.n - 1)
        )
        if not ok:
            raise ValueError(
                f"inconsistent characteristics: (n={self.n}, leaves={self.leaves}, "
                f"d_min={self.d_min}, d_max={self.d_max})"
            )

    def as_dict(self) -> dict[str, int]:
        return {"n": self.n, "leaves": self.leaves, "d_min": self.d_min, "d_max": self.d_max}


def tree_characteristics(t: RootedTree) -> RootedTreeCharacteristics:
    """Leaf count and child-count extremes of a rooted tree.

    A leaf is a vertex that is nobody's father.  Vertices with children
    are the only ones counted for ``d_min``.
    """
    counts = t.child_counts()
    internal = [c for c in counts if c > 0]
    return RootedTreeCharacteristics(
        n=t.node_count,
        leaves=counts.count(0),
        d_min=min(internal, default=0),
        d_max=max(internal, default=0),
    )


def tree_to_partition(t: RootedTree) -> PartitionInstance:
    """Project a tree with at least two vertices onto its father vector."""
    if t.node_count < 2:
        raise ValueError("mapping undefined for single vertex")
    return PartitionInstance(t.father)
