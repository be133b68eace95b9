"""Independent red-black hierarchy checker.

Nothing here touches the builder; ancestry comes from an Euler tour and
connectivity from a fresh union-find.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import MalformedHierarchy
from .graph import Graph
from .hierarchy import Hierarchy


class Rule(str, enum.Enum):
    ROOT = "Root"
    LEAF = "Leaf"
    CROSS_EDGE = "CrossEdge"
    TREE_RULE = "TreeRule"
    ALPHA_NOT_BIJECTIVE = "AlphaNotBijective"
    BETA_NOT_ANCESTOR = "BetaNotAncestor"


@dataclass(frozen=True)
class RuleViolation:
    rule: Rule
    location: int
    detail: str
    kind: str = "node"  # "node", "edge" or "vertex"

    def __str__(self):
        return f"{self.rule.value} at {self.kind} {self.location}: {self.detail}"


def _check_structure(h: Hierarchy) -> tuple[int, np.ndarray, np.ndarray]:
    """Validate parent/child consistency; return (root, tin, tout)."""
    n_nodes = h.n_nodes
    if n_nodes == 0:
        raise MalformedHierarchy("hierarchy has no nodes")
    parent = h.parent
    if h.child_ptr.shape[0] != n_nodes + 1 or h.leaf_vertex.shape[0] != n_nodes:
        raise MalformedHierarchy("per-node arrays disagree in length")
    if np.any((parent < -1) | (parent >= n_nodes)):
        raise MalformedHierarchy("parent id out of range")
    roots = np.flatnonzero(parent == -1)
    if roots.size != 1:
        raise MalformedHierarchy(f"expected one root, found {roots.size}")
    ids = h.child_ids
    if np.any((ids < 0) | (ids >= n_nodes)):
        raise MalformedHierarchy("child id out of range")
    if ids.shape[0] != n_nodes - 1 or np.unique(ids).shape[0] != ids.shape[0]:
        raise MalformedHierarchy("every non-root node must be listed as a child exactly once")
    owner = np.repeat(np.arange(n_nodes), np.diff(h.child_ptr))
    bad = np.flatnonzero(parent[ids] != owner)
    if bad.size:
        x = int(ids[bad[0]])
        raise MalformedHierarchy(f"node {x} listed under {int(owner[bad[0]])} but its parent is {int(parent[x])}")
    root = int(roots[0])
    tin = np.full(n_nodes, -1, dtype=np.int64)
    tout = np.full(n_nodes, -1, dtype=np.int64)
    clock = 0
    stack = [(root, False)]
    while stack:
        x, done = stack.pop()
        if done:
            tout[x] = clock
            clock += 1
            continue
        tin[x] = clock
        clock += 1
        stack.append((x, True))
        for y in reversed(h.children(x).tolist()):
            stack.append((y, False))
    if np.any(tin < 0):
        raise MalformedHierarchy("some nodes are not reachable from the root (parent cycle)")
    return root, tin, tout


class _DSU:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def verify_hierarchy(g: Graph, h: Hierarchy) -> list[RuleViolation]:
    """All rule violations of ``h`` as a red-black hierarchy for ``g``; empty means accept."""
    root, tin, tout = _check_structure(h)
    if h.cross_edges.shape[0] != g.m or h.edges.shape[0] != g.m:
        raise MalformedHierarchy(f"hierarchy covers {h.cross_edges.shape[0]} edges, graph has {g.m}")
    if not np.array_equal(h.edges, g.edges):
        raise MalformedHierarchy("hierarchy edge list differs from the graph's")
    out: list[RuleViolation] = []
    parent = h.parent
    nkids = h.n_children()
    n_nodes = h.n_nodes

    if nkids[root] != 2:
        out.append(RuleViolation(Rule.ROOT, root, f"root has {int(nkids[root])} children"))

    for x in range(n_nodes):
        if x == root:
            continue
        only = nkids[parent[x]] == 1
        leaf = nkids[x] == 0
        if only and not leaf:
            out.append(RuleViolation(Rule.LEAF, x, "only child but not a leaf"))
        elif leaf and not only:
            out.append(RuleViolation(Rule.LEAF, x, f"leaf with {int(nkids[parent[x]]) - 1} siblings"))

    leaf_at = np.full(g.n, -1, dtype=np.int64)
    for x in range(n_nodes):
        v = int(h.leaf_vertex[x])
        if nkids[x] == 0:
            if not 0 <= v < g.n:
                out.append(RuleViolation(Rule.ALPHA_NOT_BIJECTIVE, x, f"leaf maps to invalid vertex {v}"))
            elif leaf_at[v] != -1:
                out.append(RuleViolation(Rule.ALPHA_NOT_BIJECTIVE, x, f"vertex {v} already maps to leaf {int(leaf_at[v])}"))
            else:
                leaf_at[v] = x
        elif v != -1:
            out.append(RuleViolation(Rule.ALPHA_NOT_BIJECTIVE, x, f"internal node carries vertex {v}"))
    for v in np.flatnonzero(leaf_at == -1).tolist():
        out.append(RuleViolation(Rule.ALPHA_NOT_BIJECTIVE, v, "vertex has no leaf", kind="vertex"))

    def covers(a, b):
        return tin[a] <= tin[b] and tout[b] <= tout[a]

    def grandparent(x):
        p = parent[x]
        return -1 if p == -1 else int(parent[p])

    gc_edges: dict[int, list[tuple[int, int, int]]] = {}
    for e in range(g.m):
        u, v = (int(t) for t in g.edges[e])
        a, b = (int(t) for t in h.cross_edges[e])
        if not (0 <= a < n_nodes and 0 <= b < n_nodes):
            out.append(RuleViolation(Rule.BETA_NOT_ANCESTOR, e, "edge has no cross edge", kind="edge"))
            continue
        lu, lv = int(leaf_at[u]), int(leaf_at[v])
        if lu == -1 or lv == -1:
            out.append(RuleViolation(Rule.BETA_NOT_ANCESTOR, e, "endpoint has no leaf", kind="edge"))
        elif not ((covers(a, lu) and covers(b, lv)) or (covers(a, lv) and covers(b, lu))):
            out.append(RuleViolation(
                Rule.BETA_NOT_ANCESTOR, e, f"nodes ({a}, {b}) are not ancestors of leaves ({lu}, {lv})", kind="edge",
            ))
        ga, gb = grandparent(a), grandparent(b)
        if ga == -1 or gb == -1:
            out.append(RuleViolation(Rule.CROSS_EDGE, e, "endpoint has no grandparent", kind="edge"))
        elif ga != gb:
            out.append(RuleViolation(Rule.CROSS_EDGE, e, f"grandparents differ ({ga} vs {gb})", kind="edge"))
        elif parent[a] == parent[b]:
            out.append(RuleViolation(Rule.CROSS_EDGE, e, f"both ends share parent {int(parent[a])}", kind="edge"))
        if ga != -1 and ga == gb:
            gc_edges.setdefault(ga, []).append((e, a, b))

    dsu = _DSU(n_nodes)
    for w in range(n_nodes):
        grandkids = [y for x in h.children(w).tolist() for y in h.children(x).tolist()]
        edges_here = gc_edges.get(w, [])
        if not grandkids:
            continue
        cyclic = [e for e, a, b in edges_here if not dsu.union(a, b)]
        if cyclic:
            out.append(RuleViolation(Rule.TREE_RULE, w, f"cross edges {cyclic} close a cycle among grandchildren"))
        elif len(edges_here) != len(grandkids) - 1:
            out.append(RuleViolation(
                Rule.TREE_RULE, w,
                f"{len(edges_here)} cross edges cannot span {len(grandkids)} grandchildren",
            ))
    return out


def certify_laman(g: Graph, h: Hierarchy) -> bool:
    """True iff ``h`` is a valid red-black hierarchy for ``g`` and ``m = 2n - 3``."""
    if g.n < 2 or g.m != 2 * g.n - 3:
        return False
    try:
        return not verify_hierarchy(g, h)
    except MalformedHierarchy:
        return False
