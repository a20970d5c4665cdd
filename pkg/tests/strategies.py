"""Shared hypothesis strategies for the test suite."""

from __future__ import annotations

import hypothesis.strategies as st

from sharpbound import Digraph, PartitionInstance, RootedTree


@st.composite
def digraphs(draw, max_n: int = 5, ensure_in_class: bool = True) -> Digraph:
    """Random digraph; by default repaired into the class by adding
    self-loops on uncovered vertices."""
    n = draw(st.integers(1, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    arcs = set(draw(st.lists(pair, max_size=n * n)))
    if ensure_in_class:
        covered = {u for arc in arcs for u in arc}
        arcs |= {(u, u) for u in range(n) if u not in covered}
    return Digraph(n, frozenset(arcs))


@st.composite
def rooted_trees(draw, max_n: int = 8) -> RootedTree:
    """Uniform-ish labeled rooted tree: an increasing father vector
    relabeled by a random permutation that fixes the root."""
    n = draw(st.integers(1, max_n))
    increasing = [draw(st.integers(0, j - 1)) for j in range(1, n)]
    perm = [0] + list(draw(st.permutations(list(range(1, n)))))
    vec = [0] * (n - 1)
    for j in range(1, n):
        vec[perm[j] - 1] = perm[increasing[j - 1]]
    return RootedTree(tuple(vec))


@st.composite
def partitions(draw, max_len: int = 12) -> PartitionInstance:
    values = draw(st.lists(st.integers(-3, 6), min_size=1, max_size=max_len))
    return PartitionInstance(tuple(values))
