"""Deterministic exhaustive generators for small combinatorial objects.

These streams are the brute-force oracles behind every validity and
sharpness sweep: all in-class labeled digraphs on ``n`` vertices, all
labeled rooted trees with root 0, and all occurrence multisets (integer
partitions) of a given total.  Enumeration is labeled, lazy, duplicate
free, and emitted in a fixed documented order, so stream hashes and shard
splits are reproducible.

Hard size caps keep accidental blow-ups at bay; callers that really want
a bigger sweep pass an explicit ``cap``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, product
from typing import Iterator

from .digraphs import Digraph, in_class
from .structures import RootedTree, father_vector_reaches_root

DIGRAPH_CAP = 5
TREE_CAP = 8
PARTITION_CAP = 20

OBJECT_KINDS = ("digraph", "rooted_tree", "partition")


def _check_size(size: int, cap: int) -> None:
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    if size > cap:
        raise ValueError(f"enumeration size exceeds cap: {size} > {cap}")


def arc_from_bit(n: int, bit: int) -> tuple[int, int]:
    """Arc encoded by bit position ``u * n + v`` of an arc-set bitmask."""
    return divmod(bit, n)


def digraph_from_mask(n: int, mask: int) -> Digraph:
    """Digraph whose arc set is the given ``n * n``-bit bitmask."""
    arcs = []
    bit = 0
    while mask:
        if mask & 1:
            arcs.append(arc_from_bit(n, bit))
        mask >>= 1
        bit += 1
    return Digraph(n, frozenset(arcs))


def enumerate_digraphs(n: int, *, cap: int = DIGRAPH_CAP) -> Iterator[Digraph]:
    """All in-class digraphs on ``n`` vertices, by ascending arc-set bitmask."""
    _check_size(n, cap)
    for mask in range(1 << (n * n)):
        g = digraph_from_mask(n, mask)
        if in_class(g):
            yield g


def enumerate_rooted_trees(n: int, *, cap: int = TREE_CAP) -> Iterator[RootedTree]:
    """All labeled rooted trees on ``n`` vertices with root 0.

    Father vectors are emitted in lexicographic order; exactly
    ``n ** (n - 2)`` of the ``n ** (n - 1)`` candidate vectors survive the
    reach-the-root filter.
    """
    _check_size(n, cap)
    for vector in product(range(n), repeat=n - 1):
        if father_vector_reaches_root(vector):
            yield RootedTree(vector)


def enumerate_partitions(n_p: int, *, cap: int = PARTITION_CAP) -> Iterator[tuple[int, ...]]:
    """All occurrence multisets summing to ``n_p``.

    Each multiset is a non-increasing tuple of positive integers; the
    stream is in decreasing lexicographic order, starting at ``(n_p,)``
    and ending at ``(1,) * n_p``.
    """
    _check_size(n_p, cap)

    def parts(remaining: int, largest: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for p in range(min(remaining, largest), 0, -1):
            yield from parts(remaining - p, p, prefix + (p,))

    yield from parts(n_p, n_p, ())


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate, plus an optional shard of the stream.

    ``shard = (i, k)`` keeps every k-th element starting at index ``i``;
    round-robin interleaving of the k shards reproduces the full stream.
    """

    object_kind: str
    size: int
    shard: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.object_kind not in OBJECT_KINDS:
            raise ValueError(f"unknown object kind: {self.object_kind!r}")
        if self.shard is not None:
            index, count = self.shard
            if not (count >= 1 and 0 <= index < count):
                raise ValueError(f"invalid shard {self.shard}: need 0 <= index < count")


def generate(spec: EnumerationSpec, *, cap: int | None = None):
    """Stream the objects described by a spec, sharded if requested."""
    if spec.object_kind == "digraph":
        stream = enumerate_digraphs(spec.size, cap=DIGRAPH_CAP if cap is None else cap)
    elif spec.object_kind == "rooted_tree":
        stream = enumerate_rooted_trees(spec.size, cap=TREE_CAP if cap is None else cap)
    else:
        stream = enumerate_partitions(spec.size, cap=PARTITION_CAP if cap is None else cap)
    if spec.shard is None:
        return stream
    index, count = spec.shard
    return islice(stream, index, None, count)
