from __future__ import annotations

import random

import pytest
from hypothesis import given

from sharpbound import (
    Digraph,
    DigraphCharacteristics,
    characteristics,
    connected_components,
    in_class,
    strongly_connected_components,
)
from sharpbound.enumeration import enumerate_digraphs

from .strategies import digraphs


def test_construction_normalizes_and_validates():
    g = Digraph(3, [(0, 1), (0, 1), (2, 2)])
    assert g.arcs == frozenset({(0, 1), (2, 2)})
    with pytest.raises(ValueError, match="endpoint"):
        Digraph(2, {(0, 2)})
    with pytest.raises(ValueError, match="non-negative"):
        Digraph(-1)


def test_in_class_examples():
    assert in_class(Digraph(1, {(0, 0)}))
    assert in_class(Digraph(2, {(0, 1)}))
    assert not in_class(Digraph(2, {(0, 0)}))  # vertex 1 isolated
    assert not in_class(Digraph(0))
    assert not in_class(Digraph(1))


def test_connected_components_examples():
    assert connected_components(Digraph(2, {(0, 1)})) == [{0, 1}]
    assert connected_components(Digraph(3, {(0, 0), (1, 2)})) == [{0}, {1, 2}]
    # two-vertex path plus a self-loop vertex: two components
    assert len(connected_components(Digraph(3, {(0, 1), (2, 2)}))) == 2


def test_connected_components_empty_graph():
    with pytest.raises(ValueError, match="empty digraph"):
        connected_components(Digraph(0))
    with pytest.raises(ValueError, match="empty digraph"):
        strongly_connected_components(Digraph(0))


def test_scc_examples():
    assert strongly_connected_components(Digraph(3, {(0, 1), (1, 2), (2, 0)})) == [{0, 1, 2}]
    assert strongly_connected_components(Digraph(2, {(0, 1)})) == [{0}, {1}]


def test_scc_five_cycle_and_three_triangles():
    arcs = {(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)}
    for base in (5, 8, 11):
        arcs |= {(base, base + 1), (base + 1, base + 2), (base + 2, base)}
    sccs = strongly_connected_components(Digraph(14, arcs))
    assert len(sccs) == 4
    assert sorted(len(c) for c in sccs) == [3, 3, 3, 5]


def test_characteristics_examples():
    assert characteristics(Digraph(1, {(0, 0)})).as_tuple() == (1, 1, 1, 1, 1, 1, 1)

    arcs = {(0, 1), (1, 2), (2, 0), (3, 4), (4, 3), (5, 6), (6, 5), (7, 8), (8, 7)}
    assert characteristics(Digraph(9, arcs)).as_tuple() == (9, 4, 4, 3, 2, 3, 2)

    arcs = {(0, 1), (1, 2), (2, 0), (3, 3), (4, 4)}
    assert characteristics(Digraph(5, arcs)).as_tuple() == (5, 3, 3, 3, 1, 3, 1)


def test_characteristics_rejects_out_of_class():
    with pytest.raises(ValueError, match="not in digraph class"):
        characteristics(Digraph(2, {(0, 0)}))


def test_characteristics_record_rejects_inconsistency():
    with pytest.raises(ValueError, match="inconsistent characteristics"):
        DigraphCharacteristics(v=2, c=1, s=1, cc_max=2, cc_min=2, scc_max=3, scc_min=1)
    with pytest.raises(ValueError, match="inconsistent characteristics"):
        DigraphCharacteristics(v=4, c=3, s=2, cc_max=2, cc_min=1, scc_max=2, scc_min=1)


def test_invariants_exhaustive_up_to_v4():
    # characteristics() validates its record; the extra clause below is the
    # component-counting inequality the record form does not spell out.
    for n in range(1, 5):
        for g in enumerate_digraphs(n):
            ch = characteristics(g)
            assert ch.c * ch.cc_max >= ch.v
            assert ch.cc_max >= ch.scc_max


def test_scc_refines_cc_and_sizes_sum_exhaustive_v3():
    for n in range(1, 4):
        for g in enumerate_digraphs(n):
            ccs = connected_components(g)
            sccs = strongly_connected_components(g)
            assert sum(len(c) for c in ccs) == n
            assert sum(len(c) for c in sccs) == n
            for scc in sccs:
                assert sum(1 for cc in ccs if scc <= cc) == 1


@given(digraphs(max_n=6))
def test_scc_refines_cc_random(g):
    ccs = connected_components(g)
    for scc in strongly_connected_components(g):
        assert sum(1 for cc in ccs if scc <= cc) == 1


@given(digraphs(max_n=6))
def test_components_ordered_by_smallest_vertex(g):
    ccs = connected_components(g)
    assert [min(c) for c in ccs] == sorted(min(c) for c in ccs)
    sccs = strongly_connected_components(g)
    assert [min(c) for c in sccs] == sorted(min(c) for c in sccs)


@given(digraphs(max_n=6))
def test_characteristics_label_invariant(g):
    rng = random.Random(sum(u * 7 + v for u, v in g.arcs) + g.vertex_count)
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    relabeled = Digraph(g.vertex_count, {(perm[u], perm[v]) for u, v in g.arcs})
    assert characteristics(relabeled) == characteristics(g)


def test_arc_insertion_order_irrelevant():
    arcs = [(0, 1), (1, 2), (2, 0), (3, 3)]
    forward = Digraph(4, arcs)
    backward = Digraph(4, list(reversed(arcs)))
    assert connected_components(forward) == connected_components(backward)
    assert strongly_connected_components(forward) == strongly_connected_components(backward)
