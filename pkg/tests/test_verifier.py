import numpy as np
import pytest

from _support import (
    MUTATION_CATALOG,
    mutate_alpha_collision,
    mutate_alpha_swap,
    mutate_root_fanout,
)
from lamanrbh import (
    ForestPartition,
    Hierarchy,
    MalformedHierarchy,
    Rule,
    build_hierarchy,
    certify_laman,
    complete_graph,
    henneberg_with_partition,
    make_graph,
    verify_hierarchy,
)

K3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k3_h():
    return build_hierarchy(K3, ForestPartition.from_red(3, [0, 1]))[0]


def rules(g, h):
    return {v.rule for v in verify_hierarchy(g, h)}


def test_accepts_builder_output(k3_h):
    assert verify_hierarchy(K3, k3_h) == []
    assert certify_laman(K3, k3_h)


def test_beta_reroute_to_two_leaves(k3_h):
    # edge (0, 2) now claims leaf 0 (node 6) and leaf 1 (node 5)
    cross = k3_h.cross_edges.copy()
    cross[2] = (6, 5)
    found = verify_hierarchy(K3, k3_h.replace(cross_edges=cross))
    assert {Rule.CROSS_EDGE, Rule.BETA_NOT_ANCESTOR} <= {v.rule for v in found}
    assert all(v.location == 2 for v in found if v.kind == "edge")


def test_root_fanout_flags_root_and_tree_rule(k3_h):
    found = verify_hierarchy(K3, mutate_root_fanout(k3_h))
    root_hits = [v for v in found if v.rule is Rule.ROOT]
    assert len(root_hits) == 1 and "3 children" in root_hits[0].detail
    assert any(v.rule is Rule.TREE_RULE and v.location == 0 for v in found)


def test_alpha_swap_fails_certification(k3_h):
    swapped = mutate_alpha_swap(k3_h, 0, 1)
    assert Rule.BETA_NOT_ANCESTOR in rules(K3, swapped)
    assert not certify_laman(K3, swapped)


def test_alpha_not_bijective():
    g, p = henneberg_with_partition(10, 1)
    h, _ = build_hierarchy(g, p)
    found = verify_hierarchy(g, mutate_alpha_collision(h))
    kinds = {(v.rule, v.kind) for v in found}
    assert (Rule.ALPHA_NOT_BIJECTIVE, "node") in kinds
    assert (Rule.ALPHA_NOT_BIJECTIVE, "vertex") in kinds


def test_internal_node_with_vertex(k3_h):
    leaf = k3_h.leaf_vertex.copy()
    leaf[1] = 0
    assert Rule.ALPHA_NOT_BIJECTIVE in rules(K3, k3_h.replace(leaf_vertex=leaf))


@pytest.mark.parametrize("name, mutate, rule", MUTATION_CATALOG, ids=[m[0] for m in MUTATION_CATALOG])
def test_mutation_catalog(name, mutate, rule):
    for n, seed in ((3, 0), (9, 2), (30, 5)):
        g, p = henneberg_with_partition(n, seed, 0.5)
        h, _ = build_hierarchy(g, p)
        assert rule in {v.rule.value for v in verify_hierarchy(g, mutate(h))}, (name, n)


def test_violations_are_collected_exhaustively(k3_h):
    cross = np.full((3, 2), -1)
    found = verify_hierarchy(K3, k3_h.replace(cross_edges=cross))
    assert {v.location for v in found if v.kind == "edge"} == {0, 1, 2}


def test_cross_edge_at_depth_one_has_no_grandparent(k3_h):
    cross = k3_h.cross_edges.copy()
    cross[0] = (1, 2)
    found = verify_hierarchy(K3, k3_h.replace(cross_edges=cross))
    assert any(v.rule is Rule.CROSS_EDGE and "grandparent" in v.detail for v in found)


def test_malformed_structures(k3_h):
    kids = k3_h.children_lists()
    kids[1] = [3]  # node 4 no longer listed anywhere
    with pytest.raises(MalformedHierarchy):
        verify_hierarchy(K3, k3_h.replace(children=kids))
    parent = k3_h.parent.copy()
    parent[3] = 2
    with pytest.raises(MalformedHierarchy):
        verify_hierarchy(K3, k3_h.replace(parent=parent))
    parent = k3_h.parent.copy()
    parent[1] = -1
    with pytest.raises(MalformedHierarchy):
        verify_hierarchy(K3, k3_h.replace(parent=parent))
    with pytest.raises(MalformedHierarchy):
        verify_hierarchy(make_graph(3, [(0, 1), (1, 2)]), k3_h)


def test_parent_cycle_is_malformed():
    h = Hierarchy([-1, 2, 1], [[], [2], [1]], [-1, -1, -1], np.zeros((0, 2)), np.zeros((0, 2)))
    with pytest.raises(MalformedHierarchy):
        verify_hierarchy(make_graph(2, []), h)


def test_certify_requires_edge_count(k3_h):
    assert not certify_laman(complete_graph(4), k3_h)
    assert not certify_laman(make_graph(1, []), k3_h)


def test_certify_treats_malformed_as_false(k3_h):
    parent = k3_h.parent.copy()
    parent[3] = 2
    assert not certify_laman(K3, k3_h.replace(parent=parent))


def test_violation_text(k3_h):
    (v, *_) = verify_hierarchy(K3, mutate_root_fanout(k3_h))
    assert str(v).startswith(f"{v.rule.value} at {v.kind} {v.location}:")
