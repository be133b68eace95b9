"""Graph text files, hierarchy JSON documents and DOT export."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import GraphError, ParseError, SchemaError
from .graph import Graph, make_graph
from .hierarchy import Hierarchy
from .partition import COLOR_NAMES, RED, ForestPartition

_COLOR_CODES = {name: i for i, name in enumerate(COLOR_NAMES)}


def parse_graph_text(text: str) -> Graph:
    """Parse ``n m`` followed by exactly ``m`` lines ``u v``; ``#`` starts a comment."""
    header = None
    pairs: list[tuple[int, int]] = []
    lines: list[int] = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {body!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {body!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("vertex and edge counts must be non-negative", lineno)
            header = (a, b)
            continue
        if len(pairs) == header[1]:
            raise ParseError(f"more than the declared {header[1]} edges", lineno)
        pairs.append((a, b))
        lines.append(lineno)
    if header is None:
        raise ParseError("missing 'n m' header line", last or 1)
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"declared {m} edges but found {len(pairs)}", last)
    try:
        return make_graph(n, pairs)
    except GraphError as exc:
        line = lines[exc.edge_index] if exc.edge_index is not None else None
        raise ParseError(str(exc), line) from exc


def parse_graph_file(path) -> Graph:
    return parse_graph_text(Path(path).read_text())


def graph_text(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"]
    rows.extend(f"{u} {v}" for u, v in g.edges.tolist())
    return "\n".join(rows) + "\n"


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(graph_text(g))


def hierarchy_document(h: Hierarchy) -> dict:
    nodes = []
    for x in range(h.n_nodes):
        p = int(h.parent[x])
        leaf = int(h.leaf_vertex[x])
        color = int(h.node_color[x])
        nodes.append({
            "id": x,
            "parent": None if p == -1 else p,
            "children": h.children(x).tolist(),
            "leaf_of": None if leaf == -1 else leaf,
            "color": None if color == -1 else COLOR_NAMES[color],
        })
    cross = []
    for (u, v), (a, b) in zip(h.edges.tolist(), h.cross_edges.tolist()):
        cross.append({"edge": [u, v], "nodes": None if a == -1 or b == -1 else [a, b]})
    return {"nodes": nodes, "cross_edges": cross}


def hierarchy_json(h: Hierarchy) -> str:
    doc = hierarchy_document(h)
    dump = lambda obj: json.dumps(obj, separators=(", ", ": "))  # noqa: E731
    parts = ['{"nodes": [']
    parts.append(",\n".join(dump(x) for x in doc["nodes"]))
    parts.append('],\n"cross_edges": [')
    parts.append(",\n".join(dump(x) for x in doc["cross_edges"]))
    parts.append("]}\n")
    return "\n".join(parts)


def write_hierarchy(h: Hierarchy, path) -> None:
    Path(path).write_text(hierarchy_json(h))


def _int(value, path, allow_none=False):
    if value is None and allow_none:
        return -1
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"expected integer{' or null' if allow_none else ''}, got {value!r}", path)
    return value


def hierarchy_from_document(doc) -> Hierarchy:
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    for key in ("nodes", "cross_edges"):
        if not isinstance(doc.get(key), list):
            raise SchemaError(f"missing array {key!r}")
    nodes = doc["nodes"]
    count = len(nodes)
    parent = [None] * count
    children: list[list[int] | None] = [None] * count
    leaf = [-1] * count
    color = [-1] * count
    for i, node in enumerate(nodes):
        at = f"$.nodes[{i}]"
        if not isinstance(node, dict):
            raise SchemaError("node must be an object", at)
        x = _int(node.get("id"), f"{at}.id")
        if not 0 <= x < count:
            raise SchemaError(f"id {x} outside [0, {count})", f"{at}.id")
        if parent[x] is not None:
            raise SchemaError(f"duplicate id {x}", f"{at}.id")
        p = _int(node.get("parent"), f"{at}.parent", allow_none=True)
        if p == x:
            raise SchemaError(f"node {x} is its own parent", f"{at}.parent")
        if not -1 <= p < count:
            raise SchemaError(f"parent {p} is not a node id", f"{at}.parent")
        kids = node.get("children")
        if not isinstance(kids, list):
            raise SchemaError("children must be an array", f"{at}.children")
        kid_ids = [_int(k, f"{at}.children[{j}]") for j, k in enumerate(kids)]
        for j, k in enumerate(kid_ids):
            if not 0 <= k < count:
                raise SchemaError(f"child {k} is not a node id", f"{at}.children[{j}]")
            if k == x:
                raise SchemaError(f"node {x} is its own child", f"{at}.children[{j}]")
        parent[x] = p
        children[x] = kid_ids
        leaf[x] = _int(node.get("leaf_of"), f"{at}.leaf_of", allow_none=True)
        c = node.get("color")
        if c is not None and c not in _COLOR_CODES:
            raise SchemaError(f"unknown color {c!r}", f"{at}.color")
        color[x] = -1 if c is None else _COLOR_CODES[c]
    edges = []
    cross = []
    for i, item in enumerate(doc["cross_edges"]):
        at = f"$.cross_edges[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("cross edge must be an object", at)
        pair = item.get("edge")
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError("edge must be a pair", f"{at}.edge")
        edges.append([_int(pair[0], f"{at}.edge[0]"), _int(pair[1], f"{at}.edge[1]")])
        ends = item.get("nodes")
        if ends is None:
            cross.append([-1, -1])
            continue
        if not isinstance(ends, list) or len(ends) != 2:
            raise SchemaError("nodes must be a pair or null", f"{at}.nodes")
        a, b = _int(ends[0], f"{at}.nodes[0]"), _int(ends[1], f"{at}.nodes[1]")
        for j, t in enumerate((a, b)):
            if not 0 <= t < count:
                raise SchemaError(f"{t} is not a node id", f"{at}.nodes[{j}]")
        cross.append([a, b])
    return Hierarchy(
        parent,
        children,
        leaf,
        np.asarray(edges, dtype=np.int64).reshape(-1, 2),
        np.asarray(cross, dtype=np.int64).reshape(-1, 2),
        color,
    )


def read_hierarchy(path) -> Hierarchy:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return hierarchy_from_document(doc)


def graph_dot(g: Graph, partition: ForestPartition | None = None) -> str:
    lines = ["graph G {", "  node [shape=circle];"]
    lines.extend(f"  {v};" for v in range(g.n))
    for e, (u, v) in enumerate(g.edges.tolist()):
        if partition is None:
            lines.append(f"  {u} -- {v};")
        else:
            name = "red" if partition.colors[e] == RED else "black"
            lines.append(f"  {u} -- {v} [color={name}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hierarchy_dot(h: Hierarchy) -> str:
    lines = ["digraph H {", "  node [shape=point];"]
    for x in range(h.n_nodes):
        v = int(h.leaf_vertex[x])
        if v >= 0:
            lines.append(f'  n{x} [shape=circle, label="{v}"];')
    for x in range(h.n_nodes):
        for y in h.children(x).tolist():
            lines.append(f"  n{x} -> n{y} [style=solid];")
    for a, b in h.cross_edges.tolist():
        if a >= 0 and b >= 0:
            lines.append(f"  n{a} -> n{b} [style=dashed, constraint=false, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(obj, path, partition: ForestPartition | None = None) -> None:
    """Write ``obj`` (a Graph or a Hierarchy) as DOT."""
    if isinstance(obj, Hierarchy):
        text = hierarchy_dot(obj)
    elif isinstance(obj, Graph):
        text = graph_dot(obj, partition)
    else:
        raise TypeError(f"cannot export {type(obj).__name__} as DOT")
    Path(path).write_text(text)
