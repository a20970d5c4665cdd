"""Labeled digraphs and their component characteristics.

Vertices are dense 0-based labels.  Self-loops are allowed; parallel arcs
are not (arcs form a set).  "Connected component" always means weak
connectivity, i.e. components of the underlying undirected graph, while
strongly connected components use directed reachability.  A single vertex
without a self-loop is an SCC of size 1.

All functions here are pure; :class:`Digraph` values are immutable and
safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices ``0 .. vertex_count - 1``."""

    vertex_count: int
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside [0, {self.vertex_count})")

    def arc_list(self) -> list[Arc]:
        """Arcs in sorted order (canonical for printing and hashing)."""
        return sorted(self.arcs)

    def __repr__(self) -> str:  # compact, reproducible
        return f"Digraph({self.vertex_count}, {self.arc_list()})"


@dataclass(frozen=True)
class DigraphCharacteristics:
    """The seven component counts and size extremes of an in-class digraph.

    ``v``: vertices; ``c``/``s``: number of connected / strongly connected
    components; ``cc_max``/``cc_min``: largest and smallest connected
    component sizes; ``scc_max``/``scc_min``: largest and smallest SCC sizes.
    """

    v: int
    c: int
    s: int
    cc_max: int
    cc_min: int
    scc_max: int
    scc_min: int

    def __post_init__(self) -> None:
        ok = (
            1 <= self.cc_min <= self.cc_max <= self.v
            and 1 <= self.scc_min <= self.scc_max <= self.cc_max
            and 1 <= self.c <= self.s <= self.v
            and self.c * self.cc_min <= self.v <= self.c * self.cc_max
            and self.s * self.scc_min <= self.v <= self.s * self.scc_max
        )
        if not ok:
            raise ValueError(f"inconsistent characteristics: {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int, int, int, int]:
        return (self.v, self.c, self.s, self.cc_max, self.cc_min, self.scc_max, self.scc_min)

    def as_dict(self) -> dict[str, int]:
        return {
            "v": self.v,
            "c": self.c,
            "s": self.s,
            "cc_max": self.cc_max,
            "cc_min": self.cc_min,
            "scc_max": self.scc_max,
            "scc_min": self.scc_min,
        }


def in_class(g: Digraph) -> bool:
    """True iff every vertex is the tail or the head of at least one arc.

    A self-loop covers its vertex.  The empty digraph is not in class:
    membership requires at least one vertex, each carrying an arc.
    """
    if g.vertex_count == 0:
        return False
    covered = set()
    for u, v in g.arcs:
        covered.add(u)
        covered.add(v)
    return len(covered) == g.vertex_count


def _undirected_adjacency(g: Digraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.vertex_count)]
    for u, v in g.arcs:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def connected_components(g: Digraph) -> list[set[int]]:
    """Weakly connected components, ordered by smallest contained vertex."""
    if g.vertex_count == 0:
        raise ValueError("empty digraph")
    adj = _undirected_adjacency(g)
    seen = [False] * g.vertex_count
    components: list[set[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        components.append(comp)
    return components  # discovery from vertex 0 upward already orders by min


def strongly_connected_components(g: Digraph) -> list[set[int]]:
    """Strongly connected components, ordered by smallest contained vertex.

    Iterative Tarjan; safe for graphs far larger than the enumeration caps.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("empty digraph")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(g.arcs):
        adj[u].append(v)

    index = [0] * n  # 0 = unvisited; assigned indices start at 1
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[set[int]] = []
    counter = 1

    for root in range(n):
        if index[root]:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, next_i = work[-1]
            if next_i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            for i in range(next_i, len(adj[v])):
                w = adj[v][i]
                if not index[w]:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.add(w)
                    if w == v:
                        break
                components.append(comp)

    components.sort(key=min)
    return components


def characteristics(g: Digraph) -> DigraphCharacteristics:
    """Compute all seven characteristics of an in-class digraph."""
    if not in_class(g):
        raise ValueError("not in digraph class")
    cc_sizes = [len(c) for c in connected_components(g)]
    scc_sizes = [len(c) for c in strongly_connected_components(g)]
    return DigraphCharacteristics(
        v=g.vertex_count,
        c=len(cc_sizes),
        s=len(scc_sizes),
        cc_max=max(cc_sizes),
        cc_min=min(cc_sizes),
        scc_max=max(scc_sizes),
        scc_min=min(scc_sizes),
    )
