"""Property tests over generated graphs."""

import json
import math
import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import naive_build, random_graph
from lamanrbh import (
    Infeasible,
    Reason,
    brute_force_laman,
    build_hierarchy,
    henneberg_generate,
    henneberg_with_partition,
    is_laman,
    partition_two_forests,
    validate_partition,
    verify_hierarchy,
)
from lamanrbh.io import hierarchy_from_document, hierarchy_json

sizes = st.integers(min_value=2, max_value=300)
seeds = st.integers(min_value=0, max_value=2**32 - 1)
probs = st.sampled_from([0.0, 0.25, 0.5, 0.75, 1.0])


@settings(max_examples=60, deadline=None)
@given(n=sizes, seed=seeds, prob=probs)
def test_henneberg_graphs_are_certified(n, seed, prob):
    g = henneberg_generate(n, seed, prob)
    v = is_laman(g)
    assert v.reason is Reason.OK
    assert verify_hierarchy(g, v.certificate) == []
    assert validate_partition(g, v.partition)
    h = v.certificate
    assert h.n_nodes <= 3 * n
    assert int((h.leaf_vertex >= 0).sum()) == n
    assert v.counters.splits == g.m


@settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=2, max_value=120), seed=seeds, prob=probs)
def test_fast_and_naive_builders_agree(n, seed, prob):
    g, p = henneberg_with_partition(n, seed, prob)
    assert build_hierarchy(g, p)[0] == naive_build(g, p)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=2, max_value=400), seed=seeds)
def test_relabels_halve_per_color(n, seed):
    # each relabel at least halves a vertex's tree in one of the two colors
    g, p = henneberg_with_partition(n, seed, 0.5)
    _, c = build_hierarchy(g, p)
    lg = math.floor(math.log2(n))
    assert c.relabels <= 2 * n * lg
    assert c.edge_tests <= 4 * g.m * (lg + 1)


@settings(max_examples=80, deadline=None)
@given(n=st.integers(min_value=3, max_value=8), seed=seeds)
def test_random_graphs_match_oracle(n, seed):
    g = random_graph(n, 2 * n - 3, np.random.default_rng(seed))
    v = is_laman(g)
    assert v.is_laman == brute_force_laman(g)
    if isinstance(partition_two_forests(g), Infeasible):
        assert v.reason is Reason.NOT_PARTITIONABLE


@settings(max_examples=30, deadline=None)
@given(n=st.integers(min_value=2, max_value=200), seed=seeds)
def test_json_round_trip(n, seed):
    g, p = henneberg_with_partition(n, seed, 0.5)
    h, _ = build_hierarchy(g, p)
    assert hierarchy_from_document(json.loads(hierarchy_json(h))) == h


_PROBE = """
import json, sys
from lamanrbh import henneberg_with_partition, build_hierarchy, partition_two_forests, JIT_ENABLED
from lamanrbh.io import hierarchy_json
out = {"jit": JIT_ENABLED, "runs": []}
for n, seed in ((2, 0), (3, 1), (40, 2), (150, 3)):
    g, _ = henneberg_with_partition(n, seed, 0.5)
    p = partition_two_forests(g)
    h, c = build_hierarchy(g, p)
    out["runs"].append([p.colors.tolist(), hierarchy_json(h), c.as_dict()])
json.dump(out, sys.stdout)
"""


def _probe(pure: bool):
    env = dict(os.environ)
    env.pop("LAMANRBH_PURE_PYTHON", None)
    if pure:
        env["LAMANRBH_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-c", _PROBE], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def test_pure_python_backend_matches_compiled():
    pure, compiled = _probe(True), _probe(False)
    assert pure["jit"] is False
    assert pure["runs"] == compiled["runs"]
