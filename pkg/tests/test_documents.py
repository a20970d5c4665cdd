from __future__ import annotations

import pytest
from hypothesis import given

from sharpbound import Digraph, PartitionInstance, RootedTree
from sharpbound.documents import (
    DocumentError,
    parse_document,
    to_dot,
    to_json_text,
    to_plain_text,
)

from .strategies import digraphs, partitions, rooted_trees


def test_parse_json_digraph():
    doc = parse_document('{"n": 2, "arcs": [[0, 1]]}')
    assert doc.kind == "digraph"
    assert doc.payload == Digraph(2, {(0, 1)})


def test_parse_json_tree_and_partition():
    assert parse_document('{"father": [0, 0, 2, 0, 3, 3]}').payload == RootedTree((0, 0, 2, 0, 3, 3))
    assert parse_document('{"values": [1, 1, 2]}').payload == PartitionInstance((1, 1, 2))


def test_parse_json_errors_carry_position():
    with pytest.raises(DocumentError, match=r"line 2"):
        parse_document('{"n": 2,\n "arcs": [[0, 1]')
    with pytest.raises(DocumentError, match="unrecognized document keys"):
        parse_document('{"nodes": 2}')
    with pytest.raises(DocumentError, match="expected a partition document"):
        parse_document('{"n": 1, "arcs": [[0, 0]]}', kind="partition")
    with pytest.raises(DocumentError, match="endpoint"):
        parse_document('{"n": 1, "arcs": [[0, 4]]}')
    with pytest.raises(DocumentError, match="list of integers"):
        parse_document('{"values": [1, "x"]}')


def test_parse_text_digraph_with_comments():
    text = "# witness\nn=3\n0 1  # the path\n2 2\n"
    doc = parse_document(text)
    assert doc.payload == Digraph(3, {(0, 1), (2, 2)})


def test_parse_text_errors():
    with pytest.raises(DocumentError, match=r"line 3, column 3"):
        parse_document("n=3\n0 1\n2 x\n")
    with pytest.raises(DocumentError, match="tail head"):
        parse_document("n=3\n0 1 2\n")
    with pytest.raises(DocumentError, match="empty document"):
        parse_document("# nothing here\n")
    with pytest.raises(DocumentError, match="cannot infer kind"):
        parse_document("0 0 2\n")
    with pytest.raises(DocumentError, match="n=<k> header"):
        parse_document("0 1\n", kind="digraph")


def test_parse_text_tree_and_partition_with_explicit_kind():
    assert parse_document("0 0 2\n", kind="rooted_tree").payload == RootedTree((0, 0, 2))
    assert parse_document("5 5 2\n", kind="partition").payload == PartitionInstance((5, 5, 2))
    with pytest.raises(DocumentError, match="not a tree"):
        parse_document("2 1\n", kind="rooted_tree")


@given(digraphs(max_n=5, ensure_in_class=False))
def test_digraph_round_trip(g):
    assert parse_document(to_json_text(g)).payload == g
    assert parse_document(to_plain_text(g)).payload == g


@given(rooted_trees(max_n=7))
def test_tree_round_trip(t):
    assert parse_document(to_json_text(t)).payload == t
    if t.node_count >= 2:  # the single-vertex tree has no plain-text form
        assert parse_document(to_plain_text(t), kind="rooted_tree").payload == t


@given(partitions())
def test_partition_round_trip(p):
    assert parse_document(to_json_text(p)).payload == p
    assert parse_document(to_plain_text(p), kind="partition").payload == p


def test_dot_export():
    dot = to_dot(Digraph(3, {(0, 1), (2, 2)}))
    assert dot == "digraph g {\n  0;\n  1;\n  2;\n  0 -> 1;\n  2 -> 2;\n}\n"
