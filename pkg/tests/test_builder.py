import math

import numpy as np
import pytest

from _support import naive_build
from lamanrbh import (
    BLACK,
    RED,
    EdgeNotLive,
    EndpointsSplit,
    ForestPartition,
    ForestState,
    InvalidPartition,
    LeafRuleViolation,
    OpCounters,
    build_hierarchy,
    find_crossing_edges,
    henneberg_generate,
    henneberg_with_partition,
    make_graph,
    partition_two_forests,
    verify_hierarchy,
)

K3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
K3_P = ForestPartition.from_red(3, [0, 1])
K2 = make_graph(2, [(0, 1)])
K2_P = ForestPartition.from_red(1, [0])


def _red_tree(n, edges):
    """A state whose red forest is ``edges`` and whose black forest is empty."""
    g = make_graph(n, edges)
    state = ForestState(g, ForestPartition.from_red(g.m, range(g.m)))
    return g, state.forest(RED)


def test_k3_hierarchy_matches_hand_trace():
    h, counters = build_hierarchy(K3, K3_P)
    assert h.n_nodes == 8
    assert h.parent.tolist() == [-1, 0, 0, 1, 1, 2, 3, 4]
    assert h.children_lists() == [[1, 2], [3, 4], [5], [6], [7], [], [], []]
    # node 1 holds {0, 2}, node 2 holds {1}; leaves 5, 6, 7 are vertices 1, 0, 2
    assert h.leaf_vertex.tolist() == [-1, -1, -1, -1, -1, 1, 0, 2]
    assert h.cross_edges.tolist() == [[3, 5], [5, 4], [6, 7]]
    assert counters == OpCounters(edge_tests=3, relabels=3, splits=3)
    assert verify_hierarchy(K3, h) == []


def test_k2_hierarchy():
    h, counters = build_hierarchy(K2, K2_P)
    assert h.n_nodes == 5
    assert h.parent.tolist() == [-1, 0, 0, 1, 2]
    leaves = h.leaves().tolist()
    assert sorted(h.leaf_vertex[leaves].tolist()) == [0, 1]
    assert sorted(h.cross_edges[0].tolist()) == leaves
    assert counters.edge_tests == 1 and counters.relabels == 1
    assert verify_hierarchy(K2, h) == []


def test_henneberg_100_seed_7():
    g = henneberg_generate(100, 7)
    h, c = build_hierarchy(g, partition_two_forests(g))
    assert verify_hierarchy(g, h) == []
    lg = math.floor(math.log2(g.n))
    assert c.relabels <= g.n * lg
    assert c.edge_tests <= 4 * g.m * (lg + 1)
    assert h.n_nodes <= 3 * g.n
    assert h.cross_edges.shape == (g.m, 2)
    assert c.splits == g.m


def test_leaf_rule_violation_reports_the_vertex_set():
    g = make_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    p = partition_two_forests(g)
    with pytest.raises(LeafRuleViolation) as info:
        build_hierarchy(g, p)
    assert set(info.value.vertices) <= {0, 1, 2, 3}
    assert len(info.value.vertices) >= 2


def test_invalid_partition_rejected():
    with pytest.raises(InvalidPartition):
        build_hierarchy(K3, ForestPartition.from_red(3, [0, 1, 2]))


def test_matches_naive_builder():
    for n in (2, 3, 5, 17, 64, 150):
        for seed in range(3):
            g, p = henneberg_with_partition(n, seed, 0.6)
            assert build_hierarchy(g, p)[0] == naive_build(g, p)


def test_find_crossing_edges_k3_root():
    state = ForestState(K3, K3_P)
    red, black = state.forest(RED), state.forest(BLACK)
    counters = OpCounters()
    found = find_crossing_edges(red, black, black.headers(), counters)
    assert sorted(found) == [0, 1]
    assert counters.edge_tests == 2
    assert not red.is_live(0) and not red.is_live(1)


def test_find_crossing_edges_single_header():
    state = ForestState(K3, K3_P)
    red, black = state.forest(RED), state.forest(BLACK)
    counters = OpCounters()
    assert find_crossing_edges(red, black, [black.header(0)], counters) == []
    assert counters.edge_tests == 0


def test_find_crossing_edges_k2_root():
    state = ForestState(K2, K2_P)
    red, black = state.forest(RED), state.forest(BLACK)
    counters = OpCounters()
    assert find_crossing_edges(red, black, black.headers(), counters) == [0]
    assert counters.edge_tests == 1


def test_find_crossing_edges_needs_both_colors():
    state = ForestState(K3, K3_P)
    with pytest.raises(ValueError):
        find_crossing_edges(state.forest(RED), state.forest(RED), [0], OpCounters())


def test_split_path():
    g, red = _red_tree(3, [(0, 1), (1, 2)])
    counters = OpCounters()
    kept, new = red.remove_edge_split(1, counters)
    assert red.members(new) == [2]
    assert sorted(red.members(kept)) == [0, 1]
    assert (red.size(kept), red.size(new)) == (2, 1)
    assert counters.relabels == 1 and counters.splits == 1


def test_split_single_edge_tie_relabels_u_side():
    g, red = _red_tree(2, [(0, 1)])
    counters = OpCounters()
    kept, new = red.remove_edge_split(0, counters)
    assert red.members(new) == [0]
    assert red.header(1) == kept
    assert counters.relabels == 1


def test_split_star():
    g, red = _red_tree(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])
    counters = OpCounters()
    kept, new = red.remove_edge_split(2, counters)
    assert red.members(new) == [3]
    assert red.size(kept) == 5
    assert counters.relabels == 1
    assert red.live_edges(0) and 2 not in red.live_edges(0)


def test_split_errors():
    g, red = _red_tree(3, [(0, 1), (1, 2)])
    counters = OpCounters()
    red.remove_edge_split(0, counters)
    with pytest.raises(EdgeNotLive):
        red.remove_edge_split(0, counters)
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    state = ForestState(g, K3_P)
    with pytest.raises(EdgeNotLive):
        state.forest(RED).remove_edge_split(2, counters)


def test_split_endpoints_in_different_trees():
    g, red = _red_tree(3, [(0, 1), (1, 2)])
    state = red.state
    # force the two ends of edge 0 under different headers without removing it
    state.hdr[RED, 0] = 5
    with pytest.raises(EndpointsSplit):
        red.remove_edge_split(0, OpCounters())


def test_header_sizes_partition_the_vertices():
    g, p = henneberg_with_partition(60, 2)
    state = ForestState(g, p)
    for color in (RED, BLACK):
        sf = state.forest(color)
        members = [v for h in sf.headers() for v in sf.members(h)]
        assert sorted(members) == list(range(g.n))
        assert sum(sf.size(h) for h in sf.headers()) == g.n
    assert len(state.forest(RED).headers()) == 1
    assert len(state.forest(BLACK).headers()) == 2


def test_hierarchy_is_frozen():
    h, _ = build_hierarchy(K3, K3_P)
    with pytest.raises(ValueError):
        h.parent[0] = 3
    assert isinstance(h.leaf_of(3), np.ndarray)
    assert h.leaf_of(3).tolist() == [6, 5, 7]
