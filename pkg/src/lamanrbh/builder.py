"""Red-black hierarchy construction.

Each hierarchy node owns a spanning tree of one color over its vertex set
and a forest of the other color.  It gets one child per forest tree; the
tree-color edges running between forest trees are deleted, which splits
the spanning tree into the grandchildren, and the deleted edges become the
cross edges between those grandchildren.  Children then recurse with the
colors swapped.

Per-color tree membership is kept behind tree headers.  A node scans every
forest tree except one of maximum size, and every split relabels only the
smaller half, which keeps the whole build at ``O(n log n)``.
"""

from __future__ import annotations

import numpy as np

from . import _forest as K
from .errors import EdgeNotLive, EndpointsSplit, InvalidPartition, LeafRuleViolation
from .graph import Graph
from .hierarchy import Hierarchy, OpCounters
from .partition import ForestPartition, validate_partition


def _counters_from(arr) -> OpCounters:
    return OpCounters(int(arr[K.EDGE_TESTS]), int(arr[K.RELABELS]), int(arr[K.SPLITS]))


class ForestState:
    """Both colors' shrinking forests for one graph and partition.

    Red starts as a single tree over every vertex and black as one tree per
    black component.  Mostly useful for stepping through the primitives by
    hand; :func:`build_hierarchy` runs everything inside one kernel.
    """

    def __init__(self, g: Graph, p: ForestPartition):
        self.n = g.n
        self.eu = np.array(g.edges[:, 0], dtype=np.int64)
        self.ev = np.array(g.edges[:, 1], dtype=np.int64)
        self.ecolor = np.array(p.colors, dtype=np.int64)
        (self.hdr, self.hsize, self.hhead, self.vnext, self.vprev,
         self.ahead, self.anext, self.aprev, self.nhdr) = K.init_state(self.n, self.eu, self.ev, self.ecolor)
        for c in (0, 1):
            K.label_components(
                c, self.n, self.eu, self.ev, self.hdr, self.hsize, self.hhead,
                self.vnext, self.vprev, self.ahead, self.anext, self.nhdr,
            )
        n = max(self.n, 1)
        self._stk_v = np.empty((2, n), dtype=np.int64)
        self._stk_s = np.empty((2, n), dtype=np.int64)
        self._stk_pe = np.empty((2, n), dtype=np.int64)
        self._top = np.zeros(2, dtype=np.int64)
        self._disc = np.empty((2, n), dtype=np.int64)
        self._ndisc = np.zeros(2, dtype=np.int64)

    def forest(self, color: int) -> ShrinkingForest:
        return ShrinkingForest(self, color)


class ShrinkingForest:
    """One color's view of a :class:`ForestState`."""

    def __init__(self, state: ForestState, color: int):
        self.state = state
        self.color = color

    def header(self, v: int) -> int:
        return int(self.state.hdr[self.color, v])

    def size(self, h: int) -> int:
        return int(self.state.hsize[self.color, h])

    def headers(self) -> list[int]:
        c = self.color
        return [h for h in range(int(self.state.nhdr[c])) if self.state.hsize[c, h] > 0]

    def members(self, h: int) -> list[int]:
        s, c = self.state, self.color
        out = []
        x = s.hhead[c, h]
        while x != -1:
            out.append(int(x))
            x = s.vnext[c, x]
        return out

    def live_edges(self, v: int) -> list[int]:
        s = self.state
        out = []
        end = s.ahead[self.color, v]
        while end != -1:
            out.append(int(end >> 1))
            end = s.anext[end]
        return out

    def is_live(self, e: int) -> bool:
        return bool(self.state.ecolor[e] == self.color and self.state.anext[2 * e] != -2)

    def remove_edge_split(self, e: int, counters: OpCounters) -> tuple[int, int]:
        """Delete edge ``e``; returns ``(kept header, new header)``."""
        s, c = self.state, self.color
        if not self.is_live(e):
            raise EdgeNotLive(f"edge {e} is not a live {c}-colored edge")
        if s.hdr[c, s.eu[e]] != s.hdr[c, s.ev[e]]:
            raise EndpointsSplit(f"edge {e} joins two different trees")
        kept = int(s.hdr[c, s.eu[e]])
        arr = np.zeros(3, dtype=np.int64)
        new = K.split_edge(
            c, e, s.eu, s.ev, s.hdr, s.hsize, s.hhead, s.vnext, s.vprev, s.ahead, s.anext,
            s.aprev, s.nhdr, s._stk_v, s._stk_s, s._stk_pe, s._top, s._disc, s._ndisc, arr,
        )
        _accumulate(counters, arr)
        return kept, int(new)


def _accumulate(counters: OpCounters, arr) -> None:
    counters.edge_tests += int(arr[K.EDGE_TESTS])
    counters.relabels += int(arr[K.RELABELS])
    counters.splits += int(arr[K.SPLITS])


def find_crossing_edges(
    tree_sf: ShrinkingForest, forest_sf: ShrinkingForest, scope, counters: OpCounters
) -> list[int]:
    """Delete and return the ``tree_sf`` edges whose endpoints lie in different ``scope`` trees.

    ``scope`` lists ``forest_sf`` headers.  The tree side is split as each
    edge is found.
    """
    s = tree_sf.state
    if forest_sf.state is not s or forest_sf.color == tree_sf.color:
        raise ValueError("forests must be the two colors of one state")
    flist = np.asarray(list(scope), dtype=np.int64)
    if flist.size == 0:
        return []
    m = s.eu.shape[0]
    lbuf = np.empty(max(m, 1), dtype=np.int64)
    newh = np.empty(max(m, 1) + 1, dtype=np.int64)
    arr = np.zeros(3, dtype=np.int64)
    nl, _ = K.crossing_scan(
        tree_sf.color, flist, s.eu, s.ev, s.hdr, s.hsize, s.hhead, s.vnext, s.vprev, s.ahead,
        s.anext, s.aprev, s.nhdr, s._stk_v, s._stk_s, s._stk_pe, s._top, s._disc, s._ndisc,
        arr, lbuf, newh,
    )
    _accumulate(counters, arr)
    return lbuf[:nl].tolist()


def build_hierarchy(g: Graph, p: ForestPartition, validate: bool = True) -> tuple[Hierarchy, OpCounters]:
    """Build the red-black hierarchy of ``g`` from a valid two-forest partition.

    Raises :class:`LeafRuleViolation` when ``g`` turns out not to be Laman,
    :class:`InvalidPartition` when ``p`` fails validation.
    """
    if validate and not validate_partition(g, p):
        raise InvalidPartition("partition is not a red spanning tree plus a two-tree black forest")
    eu = np.array(g.edges[:, 0], dtype=np.int64)
    ev = np.array(g.edges[:, 1], dtype=np.int64)
    ecolor = np.array(p.colors, dtype=np.int64)
    arr = np.zeros(3, dtype=np.int64)
    status, bad, nnodes, node_parent, node_leaf, node_color, beta, bad_vertices = K.build_kernel(
        g.n, eu, ev, ecolor, arr
    )
    counters = _counters_from(arr)
    if status == K.BUILD_LEAF_RULE:
        raise LeafRuleViolation(int(bad), tuple(bad_vertices.tolist()))
    if status != K.BUILD_OK:
        raise InvalidPartition("black forest does not have exactly two trees")
    return _canonical(g, int(nnodes), node_parent, node_leaf, node_color, beta), counters


def _canonical(g, nnodes, node_parent, node_leaf, node_color, beta) -> Hierarchy:
    node_parent = node_parent[:nnodes]
    node_leaf = node_leaf[:nnodes]
    order = K.canonical_order(nnodes, node_parent, node_leaf)
    newid = np.empty(nnodes, dtype=np.int64)
    newid[order] = np.arange(nnodes, dtype=np.int64)
    old_parent = node_parent[order]
    parent = np.where(old_parent >= 0, newid[np.maximum(old_parent, 0)], -1)
    # breadth-first numbering makes every child list a contiguous id range
    child_ptr = np.searchsorted(parent[1:], np.arange(nnodes + 1), side="left")
    child_ids = np.arange(1, nnodes, dtype=np.int64)
    cross = newid[beta].reshape(-1, 2) if beta.size else np.zeros((0, 2), dtype=np.int64)
    return Hierarchy(
        parent,
        (child_ptr, child_ids),
        node_leaf[order],
        g.edges,
        cross,
        node_color[:nnodes][order],
    )
