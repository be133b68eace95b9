"""Simple undirected graphs, Henneberg generators and a brute-force Laman oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadProbability,
    DuplicateEdge,
    OutOfDomain,
    SelfLoop,
    TooLarge,
    VertexOutOfRange,
)

DEFAULT_ORACLE_LIMIT = 12


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    ``edges`` is an ``(m, 2)`` int64 array; row ``i`` is edge ``i`` with the
    endpoints in the order they were given.  Use :func:`make_graph` to build
    one, the constructor does not validate.
    """

    n: int
    edges: np.ndarray = field(repr=False)

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges]

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def make_graph(n: int, edges) -> Graph:
    """Validate and freeze a graph.  Raises on self-loops, duplicates, bad ids."""
    n = int(n)
    if n < 0:
        raise OutOfDomain(f"negative vertex count {n}")
    if not isinstance(edges, np.ndarray):
        edges = list(edges)
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        arr = np.zeros((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be a sequence of vertex pairs")
    u, v = arr[:, 0], arr[:, 1]
    bad = np.flatnonzero((u < 0) | (u >= n) | (v < 0) | (v >= n))
    if bad.size:
        i = int(bad[0])
        raise VertexOutOfRange(f"edge {i} {tuple(arr[i].tolist())} has an endpoint outside [0, {n})", i)
    bad = np.flatnonzero(u == v)
    if bad.size:
        i = int(bad[0])
        raise SelfLoop(f"edge {i} is a self-loop at vertex {int(u[i])}", i)
    keys = np.minimum(u, v) * max(n, 1) + np.maximum(u, v)
    _, first = np.unique(keys, return_index=True)
    if first.size != keys.size:
        dup = np.ones(keys.size, dtype=bool)
        dup[first] = False
        i = int(np.flatnonzero(dup)[0])
        raise DuplicateEdge(f"edge {i} {tuple(arr[i].tolist())} duplicates an earlier edge", i)
    arr = arr.copy()
    arr.setflags(write=False)
    return Graph(n, arr)


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def induced_edge_count(g: Graph, subset) -> int:
    members = np.zeros(g.n, dtype=bool)
    for v in subset:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")
        members[v] = True
    if g.m == 0:
        return 0
    return int(np.count_nonzero(members[g.edges[:, 0]] & members[g.edges[:, 1]]))


def laman_violation(g: Graph, max_n: int = DEFAULT_ORACLE_LIMIT) -> list[int] | None:
    """Return the first over-dense vertex subset found by ascending bitmask, else None.

    Only the subset count condition is checked here; the total edge count is
    the caller's business.
    """
    if g.n > max_n:
        raise TooLarge(f"brute force limited to n <= {max_n}, got {g.n}")
    masks = np.arange(1 << g.n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(g.n, dtype=np.int64)) & 1
    size = bits.sum(axis=1)
    induced = np.zeros(masks.shape[0], dtype=np.int64)
    for u, v in g.edges.tolist():
        em = (1 << u) | (1 << v)
        induced += (masks & em) == em
    bad = np.flatnonzero((size >= 2) & (induced > 2 * size - 3))
    if bad.size == 0:
        return None
    mask = int(masks[bad[0]])
    return [v for v in range(g.n) if mask >> v & 1]


def brute_force_laman(g: Graph, max_n: int = DEFAULT_ORACLE_LIMIT) -> bool:
    """Laman counting by enumerating all ``2**n`` vertex subsets."""
    if g.n > max_n:
        raise TooLarge(f"brute force limited to n <= {max_n}, got {g.n}")
    if g.n < 2 or g.m != 2 * g.n - 3:
        return False
    return laman_violation(g, max_n) is None


def _henneberg(n: int, seed: int, type2_prob: float):
    if not 0.0 <= type2_prob <= 1.0:
        raise BadProbability(f"type2_prob must lie in [0, 1], got {type2_prob}")
    if n < 2:
        raise OutOfDomain(f"Henneberg construction needs n >= 2, got {n}")
    # One PCG64 stream, four uniforms per added vertex:
    #   u[0] < type2_prob selects a type II move (needs >= 3 vertices),
    #   the rest pick vertices/edges as floor(u * count).
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.random((max(n - 2, 0), 4)).tolist()
    eu = [0]
    ev = [1]
    color = [0]
    for step, (d0, d1, d2, d3) in enumerate(draws):
        x = step + 2
        if x >= 3 and d0 < type2_prob:
            i = int(d1 * len(eu))
            u, w, c = eu[i], ev[i], color[i]
            z = int(d2 * (x - 2))
            lo, hi = min(u, w), max(u, w)
            if z >= lo:
                z += 1
            if z >= hi:
                z += 1
            # the removed edge's slot is reused for (u, x)
            ev[i] = x
            eu.append(w), ev.append(x), color.append(c)
            eu.append(z), ev.append(x), color.append(1 - c)
        else:
            a = int(d1 * x)
            b = int(d2 * (x - 1))
            if b >= a:
                b += 1
            eu.append(a), ev.append(x), color.append(0)
            eu.append(b), ev.append(x), color.append(1)
    edges = np.column_stack([np.asarray(eu, dtype=np.int64), np.asarray(ev, dtype=np.int64)])
    return edges, np.asarray(color, dtype=np.int8)


def henneberg_generate(n: int, seed: int = 0, type2_prob: float = 0.5) -> Graph:
    """Random Laman graph on ``n`` vertices grown from K2 by Henneberg moves.

    Vertex ``x`` is the ``x``-th vertex added.  Type I joins it to two
    distinct earlier vertices; type II deletes a uniformly chosen edge
    ``(u, w)`` and joins ``x`` to ``u``, ``w`` and a third earlier vertex.
    Deterministic in ``(n, seed, type2_prob)``.
    """
    edges, _ = _henneberg(n, seed, type2_prob)
    return make_graph(n, edges)


def henneberg_with_partition(n: int, seed: int = 0, type2_prob: float = 0.5):
    """Like :func:`henneberg_generate` but also returns the two-forest split the moves preserve.

    Type I colors its two new edges red and black; type II subdivides the
    deleted edge in its own color and gives the third edge the other color.
    """
    from .partition import ForestPartition

    edges, colors = _henneberg(n, seed, type2_prob)
    return make_graph(n, edges), ForestPartition(colors)
