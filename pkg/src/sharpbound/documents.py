"""Textual documents for digraphs, rooted trees, and partition sequences.

Two syntaxes per object kind:

* JSON objects: ``{"n": 3, "arcs": [[0, 1], [2, 2]]}``,
  ``{"father": [0, 0, 2]}``, ``{"values": [1, 1, 2]}``.
* Plain text with ``#`` comments: a digraph is an ``n=<k>`` header plus one
  ``u v`` arc per line; a tree is its father vector as whitespace-separated
  integers; a partition is its values the same way.

The tree and partition plain-text forms are indistinguishable, so ``kind``
must be given explicitly for those; JSON documents and digraph text are
self-describing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .digraphs import Digraph
from .structures import PartitionInstance, RootedTree

KINDS = ("digraph", "rooted_tree", "partition")

Payload = Digraph | RootedTree | PartitionInstance


class DocumentError(ValueError):
    """Parse failure with a 1-based line/column position."""

    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class GraphDocument:
    kind: str
    payload: Payload


def _int_field(obj: dict, key: str) -> int:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"field {key!r} must be an integer")
    return value


def _int_list(obj: dict, key: str) -> list[int]:
    value = obj[key]
    if not isinstance(value, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in value):
        raise DocumentError(f"field {key!r} must be a list of integers")
    return value


def _parse_json(text: str, kind: str) -> GraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(obj, dict):
        raise DocumentError("top-level JSON value must be an object")

    keys = set(obj)
    if keys == {"n", "arcs"}:
        inferred = "digraph"
    elif keys == {"father"}:
        inferred = "rooted_tree"
    elif keys == {"values"}:
        inferred = "partition"
    else:
        raise DocumentError(f"unrecognized document keys: {sorted(keys)}")
    if kind != "auto" and kind != inferred:
        raise DocumentError(f"expected a {kind} document, found {inferred}")

    try:
        if inferred == "digraph":
            n = _int_field(obj, "n")
            arcs = obj["arcs"]
            if not isinstance(arcs, list):
                raise DocumentError("field 'arcs' must be a list of [tail, head] pairs")
            pairs = []
            for arc in arcs:
                if (
                    not isinstance(arc, list)
                    or len(arc) != 2
                    or any(isinstance(x, bool) or not isinstance(x, int) for x in arc)
                ):
                    raise DocumentError(f"malformed arc {arc!r}: expected [tail, head]")
                pairs.append((arc[0], arc[1]))
            return GraphDocument("digraph", Digraph(n, frozenset(pairs)))
        if inferred == "rooted_tree":
            return GraphDocument("rooted_tree", RootedTree(tuple(_int_list(obj, "father"))))
        return GraphDocument("partition", PartitionInstance(tuple(_int_list(obj, "values"))))
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    return lines


def _parse_ints(token_line: str, lineno: int) -> list[int]:
    out = []
    column = 1
    for token in token_line.split():
        try:
            out.append(int(token))
        except ValueError:
            column = token_line.find(token) + 1
            raise DocumentError(f"expected an integer, found {token!r}", lineno, column) from None
    return out


def _parse_text(text: str, kind: str) -> GraphDocument:
    lines = _content_lines(text)
    if not lines:
        raise DocumentError("empty document")

    first_lineno, first = lines[0]
    if first.startswith("n="):
        if kind not in ("auto", "digraph"):
            raise DocumentError(f"expected a {kind} document, found digraph", first_lineno)
        try:
            n = int(first[2:].strip())
        except ValueError:
            raise DocumentError("malformed header, expected n=<integer>", first_lineno, 1) from None
        arcs = []
        for lineno, line in lines[1:]:
            values = _parse_ints(line, lineno)
            if len(values) != 2:
                raise DocumentError("expected one 'tail head' pair per line", lineno)
            arcs.append((values[0], values[1]))
        try:
            return GraphDocument("digraph", Digraph(n, frozenset(arcs)))
        except ValueError as exc:
            raise DocumentError(str(exc), first_lineno) from exc

    if kind == "auto":
        raise DocumentError(
            "cannot infer kind of a plain integer document; pass kind explicitly",
            first_lineno,
        )
    if kind == "digraph":
        raise DocumentError("digraph text must start with an n=<k> header", first_lineno)

    values: list[int] = []
    for lineno, line in lines:
        values.extend(_parse_ints(line, lineno))
    try:
        if kind == "rooted_tree":
            return GraphDocument("rooted_tree", RootedTree(tuple(values)))
        return GraphDocument("partition", PartitionInstance(tuple(values)))
    except ValueError as exc:
        raise DocumentError(str(exc), first_lineno) from exc


def parse_document(text: str, kind: str = "auto") -> GraphDocument:
    """Parse a document in either syntax; ``kind`` checks or disambiguates."""
    if kind != "auto" and kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    if text.lstrip().startswith("{"):
        return _parse_json(text, kind)
    return _parse_text(text, kind)


def to_json_dict(payload: Payload) -> dict:
    """Canonical JSON object for any payload (arcs sorted)."""
    if isinstance(payload, Digraph):
        return {"n": payload.vertex_count, "arcs": [list(a) for a in payload.arc_list()]}
    if isinstance(payload, RootedTree):
        return {"father": list(payload.father)}
    return {"values": list(payload.values)}


def to_json_text(payload: Payload) -> str:
    return json.dumps(to_json_dict(payload), sort_keys=True) + "\n"


def to_plain_text(payload: Payload) -> str:
    if isinstance(payload, Digraph):
        lines = [f"n={payload.vertex_count}"]
        lines.extend(f"{u} {v}" for u, v in payload.arc_list())
        return "\n".join(lines) + "\n"
    if isinstance(payload, RootedTree):
        return " ".join(str(f) for f in payload.father) + "\n"
    return " ".join(str(x) for x in payload.values) + "\n"


def to_dot(g: Digraph, name: str = "g") -> str:
    """GraphViz DOT text for visual inspection."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {u};" for u in range(g.vertex_count))
    lines.extend(f"  {u} -> {v};" for u, v in g.arc_list())
    lines.append("}")
    return "\n".join(lines) + "\n"
