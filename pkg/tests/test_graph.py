import numpy as np
import pytest

from lamanrbh import (
    BadProbability,
    DuplicateEdge,
    OutOfDomain,
    SelfLoop,
    TooLarge,
    VertexOutOfRange,
    brute_force_laman,
    complete_graph,
    henneberg_generate,
    henneberg_with_partition,
    induced_edge_count,
    make_graph,
    validate_partition,
)
from lamanrbh.graph import laman_violation

K3_EDGES = [(0, 1), (1, 2), (0, 2)]
K4_PENDANT = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]


def test_make_graph_k3():
    g = make_graph(3, K3_EDGES)
    assert g.n == 3 and g.m == 3
    assert g.edge_list() == K3_EDGES
    assert not g.edges.flags.writeable


def test_make_graph_k2():
    g = make_graph(2, [(0, 1)])
    assert (g.n, g.m) == (2, 1)


@pytest.mark.parametrize(
    "n, edges, error, index",
    [
        (3, [(0, 0)], SelfLoop, 0),
        (3, [(0, 1), (1, 0)], DuplicateEdge, 1),
        (3, [(0, 1), (1, 2), (2, 1)], DuplicateEdge, 2),
        (3, [(0, 1), (0, 3)], VertexOutOfRange, 1),
        (3, [(-1, 2)], VertexOutOfRange, 0),
    ],
)
def test_make_graph_errors_name_the_edge(n, edges, error, index):
    with pytest.raises(error) as info:
        make_graph(n, edges)
    assert info.value.edge_index == index


def test_make_graph_empty_edge_list():
    g = make_graph(4, [])
    assert g.m == 0 and g.edges.shape == (0, 2)


def test_induced_edge_count():
    k3 = make_graph(3, K3_EDGES)
    assert induced_edge_count(k3, {0, 1}) == 1
    assert induced_edge_count(k3, set()) == 0
    g = make_graph(5, K4_PENDANT)
    assert induced_edge_count(g, {0, 1, 2, 3}) == 6
    with pytest.raises(VertexOutOfRange):
        induced_edge_count(k3, {5})


def test_oracle_examples():
    assert brute_force_laman(make_graph(3, K3_EDGES))
    assert not brute_force_laman(complete_graph(4))
    g = make_graph(5, K4_PENDANT)
    assert g.m == 2 * g.n - 3
    assert not brute_force_laman(g)
    assert laman_violation(g) == [0, 1, 2, 3]


def test_oracle_rejects_complete_graphs_and_wrong_counts():
    for n in range(4, 8):
        assert not brute_force_laman(complete_graph(n))
    assert not brute_force_laman(make_graph(4, [(0, 1), (1, 2), (2, 3)]))


def test_oracle_size_limit():
    g = henneberg_generate(13, 0)
    with pytest.raises(TooLarge):
        brute_force_laman(g)
    assert brute_force_laman(g, max_n=13)


def test_henneberg_base_cases():
    for seed in range(5):
        assert henneberg_generate(2, seed, 0.0).edge_list() == [(0, 1)]
        g = henneberg_generate(3, seed, 0.0)
        assert sorted(tuple(sorted(e)) for e in g.edge_list()) == [(0, 1), (0, 2), (1, 2)]


def test_henneberg_seed_42():
    g = henneberg_generate(8, 42, 0.5)
    assert g.m == 13
    assert brute_force_laman(g)


@pytest.mark.parametrize("prob", [0.0, 0.3, 1.0])
def test_henneberg_outputs_are_laman(prob):
    for n in range(2, 13):
        for seed in range(4):
            g = henneberg_generate(n, seed, prob)
            assert g.m == 2 * n - 3
            assert brute_force_laman(g), (n, seed, prob)


def test_henneberg_is_reproducible():
    a = henneberg_generate(500, 9, 0.4)
    b = henneberg_generate(500, 9, 0.4)
    assert a == b
    assert a != henneberg_generate(500, 10, 0.4)


def test_henneberg_partition_is_valid():
    for n in (2, 3, 10, 200):
        for seed in range(3):
            g, p = henneberg_with_partition(n, seed, 0.5)
            assert g == henneberg_generate(n, seed, 0.5)
            assert validate_partition(g, p)


def test_henneberg_argument_checks():
    with pytest.raises(BadProbability):
        henneberg_generate(5, 0, 1.5)
    with pytest.raises(BadProbability):
        henneberg_generate(5, 0, -0.1)
    with pytest.raises(OutOfDomain):
        henneberg_generate(1, 0)


def test_degrees():
    g = make_graph(5, K4_PENDANT)
    assert g.degrees().tolist() == [3, 3, 3, 4, 1]
    assert isinstance(g.degrees(), np.ndarray)
