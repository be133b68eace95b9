"""Hierarchy certificate type and build instrumentation counters."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class OpCounters:
    """Totals charged during one build.

    ``edge_tests`` counts incident tree-color edges examined by crossing
    scans, ``relabels`` counts vertices moved to a fresh tree header, and
    ``splits`` counts edge removals.
    """

    edge_tests: int = 0
    relabels: int = 0
    splits: int = 0

    def as_dict(self) -> dict[str, int]:
        return {"edge_tests": self.edge_tests, "relabels": self.relabels, "splits": self.splits}


def _frozen(arr, dtype):
    out = np.array(arr, dtype=dtype)
    out.setflags(write=False)
    return out


class Hierarchy:
    """Rooted tree over graph vertices plus one cross edge per graph edge.

    ``parent[x]`` is -1 only for the root.  ``children(x)`` preserves the
    stored child order.  ``leaf_vertex[x]`` is the graph vertex a leaf stands
    for (-1 for internal nodes).  Row ``e`` of ``cross_edges`` holds the two
    nodes graph edge ``e`` maps to, the first for ``edges[e, 0]`` and the
    second for ``edges[e, 1]``; -1 marks a missing entry.  ``node_color``
    records which color's tree a node was expanded from (-1 for the root
    and leaves); it is informational only.
    """

    def __init__(self, parent, children, leaf_vertex, edges, cross_edges, node_color=None):
        self.parent = _frozen(parent, np.int64)
        n_nodes = self.parent.shape[0]
        if isinstance(children, tuple) and len(children) == 2 and isinstance(children[0], np.ndarray):
            ptr, ids = children
        else:
            lengths = [len(c) for c in children]
            ptr = np.zeros(len(children) + 1, dtype=np.int64)
            np.cumsum(lengths, out=ptr[1:])
            ids = np.fromiter((x for c in children for x in c), dtype=np.int64, count=int(ptr[-1]))
        self.child_ptr = _frozen(ptr, np.int64)
        self.child_ids = _frozen(ids, np.int64)
        self.leaf_vertex = _frozen(leaf_vertex, np.int64)
        self.edges = _frozen(np.asarray(edges, dtype=np.int64).reshape(-1, 2), np.int64)
        self.cross_edges = _frozen(np.asarray(cross_edges, dtype=np.int64).reshape(-1, 2), np.int64)
        if node_color is None:
            node_color = np.full(n_nodes, -1, dtype=np.int8)
        self.node_color = _frozen(node_color, np.int8)

    @property
    def n_nodes(self) -> int:
        return int(self.parent.shape[0])

    @property
    def root(self) -> int:
        roots = np.flatnonzero(self.parent == -1)
        return int(roots[0]) if roots.size else -1

    def children(self, x: int) -> np.ndarray:
        return self.child_ids[self.child_ptr[x]:self.child_ptr[x + 1]]

    def n_children(self) -> np.ndarray:
        return np.diff(self.child_ptr)

    def leaves(self) -> np.ndarray:
        return np.flatnonzero(self.n_children() == 0)

    def leaf_of(self, n: int) -> np.ndarray:
        """Vertex -> leaf node map; -1 where no leaf claims the vertex."""
        out = np.full(n, -1, dtype=np.int64)
        nodes = np.flatnonzero(self.leaf_vertex >= 0)
        verts = self.leaf_vertex[nodes]
        ok = verts < n
        out[verts[ok]] = nodes[ok]
        return out

    def tree_edge_count(self) -> int:
        return int(self.child_ids.shape[0])

    def __eq__(self, other):
        if not isinstance(other, Hierarchy):
            return NotImplemented
        return all(
            np.array_equal(getattr(self, f), getattr(other, f))
            for f in ("parent", "child_ptr", "child_ids", "leaf_vertex", "edges", "cross_edges", "node_color")
        )

    def __repr__(self):
        return f"Hierarchy(nodes={self.n_nodes}, cross_edges={self.cross_edges.shape[0]})"

    def replace(self, **changes) -> Hierarchy:
        """Copy with some fields swapped; ``children`` may be given as a list of lists."""
        fields = {
            "parent": self.parent,
            "children": (self.child_ptr, self.child_ids),
            "leaf_vertex": self.leaf_vertex,
            "edges": self.edges,
            "cross_edges": self.cross_edges,
            "node_color": self.node_color,
        }
        fields.update(changes)
        return Hierarchy(**fields)

    def children_lists(self) -> list[list[int]]:
        return [self.children(x).tolist() for x in range(self.n_nodes)]
