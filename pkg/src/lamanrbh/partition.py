"""Two-forest partition of a graph with ``2n - 3`` edges.

Edges are inserted in input order by matroid-union augmentation: an edge
goes into the red forest if that keeps it acyclic, else the black one,
else a breadth-first search over swap moves looks for a chain of
exchanges that frees a slot.  Both forests are kept as rooted parent
arrays so that cycle paths are found by walking up from both endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._jit import njit
from .errors import IndexMismatch, InvalidPartition, OutOfDomain, WrongEdgeCount
from .graph import Graph

RED = 0
BLACK = 1
COLOR_NAMES = ("red", "black")


@dataclass(frozen=True, eq=False)
class ForestPartition:
    """Per-edge color, ``RED`` (0) or ``BLACK`` (1), indexed like ``Graph.edges``."""

    colors: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.colors, dtype=np.int8).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "colors", arr)

    @classmethod
    def from_red(cls, m: int, red_indices) -> ForestPartition:
        colors = np.full(m, BLACK, dtype=np.int8)
        colors[list(red_indices)] = RED
        return cls(colors)

    def red(self) -> np.ndarray:
        return np.flatnonzero(self.colors == RED)

    def black(self) -> np.ndarray:
        return np.flatnonzero(self.colors == BLACK)

    def __eq__(self, other):
        if not isinstance(other, ForestPartition):
            return NotImplemented
        return np.array_equal(self.colors, other.colors)

    def __len__(self):
        return int(self.colors.shape[0])


@dataclass(frozen=True)
class Infeasible:
    """No two-forest partition exists.

    ``witness`` is a vertex set inducing at least ``2|witness| - 1`` edges;
    ``edge`` is the edge whose insertion failed.
    """

    edge: int
    witness: tuple[int, ...]


@njit
def _meet(par, x, y, mark_x, mark_y, stamp):
    # alternate upward walks; first vertex seen by both, or -1 if none
    if x == y:
        return x
    mark_x[x] = stamp
    mark_y[y] = stamp
    a = x
    b = y
    while a != -1 or b != -1:
        if a != -1:
            a = par[a]
            if a != -1:
                if mark_y[a] == stamp:
                    return a
                mark_x[a] = stamp
        if b != -1:
            b = par[b]
            if b != -1:
                if mark_x[b] == stamp:
                    return b
                mark_y[b] = stamp
    return -1


@njit
def _link(par, pedge, x, y, e):
    # reroot x's tree at x, then hang it below y
    prev = -1
    prev_edge = -1
    cur = x
    while cur != -1:
        nxt = par[cur]
        nxt_edge = pedge[cur]
        par[cur] = prev
        pedge[cur] = prev_edge
        prev = cur
        prev_edge = nxt_edge
        cur = nxt
    par[x] = y
    pedge[x] = e


@njit
def _cut(par, pedge, eu, ev, e):
    if pedge[eu[e]] == e and par[eu[e]] == ev[e]:
        par[eu[e]] = -1
        pedge[eu[e]] = -1
    else:
        par[ev[e]] = -1
        pedge[ev[e]] = -1


@njit
def _collect_path(par, pedge, x, top, out, k):
    while x != top:
        out[k] = pedge[x]
        k += 1
        x = par[x]
    return k


@njit
def _partition_kernel(n, eu, ev):
    """Returns (colors, status, failed_edge, labeled_edges).

    status 0 = success; 1 = infeasible, in which case labeled_edges lists the
    edges reached by the last search.
    """
    m = eu.shape[0]
    color = np.full(m, -1, dtype=np.int8)
    par = np.full((2, n), -1, dtype=np.int64)
    pedge = np.full((2, n), -1, dtype=np.int64)
    mark_x = np.zeros(n, dtype=np.int64)
    mark_y = np.zeros(n, dtype=np.int64)
    stamp = 0
    label_stamp = np.zeros(m, dtype=np.int64)
    label_from = np.full(m, -1, dtype=np.int64)
    queue = np.empty(m, dtype=np.int64)
    path = np.empty(2 * n + 2, dtype=np.int64)
    chain = np.empty(m, dtype=np.int64)
    new_color = np.empty(m, dtype=np.int8)
    search = 0
    for e0 in range(m):
        x = eu[e0]
        y = ev[e0]
        placed = False
        for f in range(2):
            stamp += 1
            if _meet(par[f], x, y, mark_x, mark_y, stamp) == -1:
                _link(par[f], pedge[f], x, y, e0)
                color[e0] = f
                placed = True
                break
        if placed:
            continue
        search += 1
        label_stamp[e0] = search
        label_from[e0] = -1
        head = 0
        tail = 0
        queue[tail] = e0
        tail += 1
        found = -1
        found_target = -1
        while head < tail and found == -1:
            f = queue[head]
            head += 1
            fx = eu[f]
            fy = ev[f]
            for target in range(2):
                if color[f] == target:
                    continue
                stamp += 1
                top = _meet(par[target], fx, fy, mark_x, mark_y, stamp)
                if top == -1:
                    found = f
                    found_target = target
                    break
                k = _collect_path(par[target], pedge[target], fx, top, path, 0)
                k = _collect_path(par[target], pedge[target], fy, top, path, k)
                cyc = np.sort(path[:k])
                for i in range(k):
                    g = cyc[i]
                    if label_stamp[g] != search:
                        label_stamp[g] = search
                        label_from[g] = f
                        queue[tail] = g
                        tail += 1
        if found == -1:
            return color, 1, e0, queue[:tail].copy()
        # walk the chain back to e0 and shift every edge one forest over
        clen = 0
        g = found
        nc = found_target
        while g != -1:
            chain[clen] = g
            new_color[clen] = nc
            clen += 1
            nc = color[g]
            g = label_from[g]
        for i in range(clen):
            g = chain[i]
            if color[g] != -1:
                _cut(par[color[g]], pedge[color[g]], eu, ev, g)
        for i in range(clen):
            g = chain[i]
            c = new_color[i]
            color[g] = c
            _link(par[c], pedge[c], eu[g], ev[g], g)
    return color, 0, -1, queue[:0].copy()


def _edge_arrays(g: Graph):
    return (
        np.array(g.edges[:, 0], dtype=np.int64),
        np.array(g.edges[:, 1], dtype=np.int64),
    )


def _component_of(edges: np.ndarray, start: int) -> tuple[int, ...]:
    adj: dict[int, list[int]] = {}
    for u, v in edges.tolist():
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return tuple(sorted(seen))


def partition_two_forests(g: Graph) -> ForestPartition | Infeasible:
    """Split ``E`` into a red spanning tree and a black two-tree forest, or report infeasibility."""
    if g.n < 2:
        raise OutOfDomain(f"need n >= 2, got {g.n}")
    if g.m != 2 * g.n - 3:
        raise WrongEdgeCount(f"m = {g.m} but 2n - 3 = {2 * g.n - 3}")
    eu, ev = _edge_arrays(g)
    colors, status, failed, labeled = _partition_kernel(g.n, eu, ev)
    if status:
        witness = _component_of(g.edges[labeled], int(eu[failed]))
        return Infeasible(int(failed), witness)
    return ForestPartition(colors)


def _is_forest(n: int, edges: np.ndarray) -> bool:
    if edges.shape[0] == 0:
        return True
    if edges.shape[0] >= n:
        return False
    mat = coo_matrix(
        (np.ones(edges.shape[0]), (edges[:, 0], edges[:, 1])), shape=(n, n)
    )
    ncomp = connected_components(mat, directed=False, return_labels=False)
    return ncomp == n - edges.shape[0]


def validate_partition(g: Graph, p: ForestPartition) -> bool:
    """Check from scratch: red is a spanning tree, black a forest with exactly two trees."""
    if len(p) != g.m:
        raise IndexMismatch(f"partition has {len(p)} colors for {g.m} edges")
    if not np.isin(p.colors, (RED, BLACK)).all():
        return False
    red = g.edges[p.colors == RED]
    black = g.edges[p.colors == BLACK]
    if red.shape[0] != g.n - 1 or black.shape[0] != g.n - 2:
        return False
    return _is_forest(g.n, red) and _is_forest(g.n, black)


def black_components(g: Graph, p: ForestPartition) -> tuple[frozenset[int], frozenset[int]]:
    """The two trees of the black forest, ordered by smallest vertex."""
    black = g.edges[p.colors == BLACK]
    mat = coo_matrix((np.ones(black.shape[0]), (black[:, 0], black[:, 1])), shape=(g.n, g.n))
    ncomp, labels = connected_components(mat, directed=False)
    if ncomp != 2:
        raise InvalidPartition(f"black forest has {ncomp} components, expected 2")
    first = frozenset(np.flatnonzero(labels == labels[0]).tolist())
    second = frozenset(range(g.n)) - first
    return first, second
