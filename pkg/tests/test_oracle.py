import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from combburn.burn import BurningSequence, verify_cover
from combburn.comb import GeneralGraph, ball, comb, complete, cycle, path, star
from combburn.oracle import (BudgetExhausted, OracleConfig, OracleResult, burn_exact,
                             burning_number_exact, burning_witness, disprove_k, hat_b_exact,
                             min_ball_cover)


def naive_burning_number(g):
    """Try every sequence of distinct centers, shortest horizon first."""
    nv = g.num_vertices
    everything = set(range(nv))
    balls = {(v, r): ball(g, v, r) for v in range(nv) for r in range(nv)}
    for k in range(1, nv + 1):
        for centers in itertools.permutations(range(nv), k):
            covered = set()
            for i, c in enumerate(centers, start=1):
                covered |= balls[c, k - i]
            if covered == everything:
                return k
    raise AssertionError("unreachable")


def naive_cover(g, r):
    nv = g.num_vertices
    balls = [ball(g, v, r) for v in range(nv)]
    for size in range(1, nv + 1):
        for pick in itertools.combinations(range(nv), size):
            if set().union(*(balls[v] for v in pick)) == set(range(nv)):
                return size
    raise AssertionError("unreachable")


@st.composite
def connected_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    # random spanning tree plus extra edges
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=n)))
    return GeneralGraph.from_edges(n, sorted(edges))


@given(connected_graphs())
def test_oracle_matches_naive(g):
    res = burn_exact(g)
    assert res.k == naive_burning_number(g)
    assert verify_cover(g, BurningSequence(res.k, res.witness)).covered


@given(connected_graphs(), st.integers(0, 3))
def test_min_cover_matches_naive(g, r):
    assert min_ball_cover(g, r) == naive_cover(g, r)


@given(connected_graphs(6))
def test_refutation_consistent(g):
    b = burning_number_exact(g)
    assert disprove_k(g, b - 1)
    assert not disprove_k(g, b)
    if b > 1:
        assert burning_witness(g, b - 1) is None


@given(connected_graphs(6))
def test_symmetry_pruning_is_sound(g):
    plain = burning_number_exact(g, OracleConfig(symmetry=False))
    assert burning_number_exact(g) == plain


@pytest.mark.parametrize("g, b", [
    (path(16), 4), (path(17), 5), (cycle(4), 2), (cycle(10), 4),
    (complete(5), 2), (star(6), 2), (path(1), 1),
])
def test_known_burning_numbers(g, b):
    assert burning_number_exact(g) == b


@pytest.mark.parametrize("n, m", [(2, 2), (3, 3), (4, 2), (2, 5), (3, 4), (5, 3)])
def test_comb_instances_against_naive(n, m):
    g = comb(n, m).to_general()
    assert burning_number_exact(g) == naive_burning_number(g)


def test_hat_b_exact_small():
    assert hat_b_exact(path(16)) == 4
    assert hat_b_exact(path(1)) == 1


def test_budget_exhaustion():
    with pytest.raises(BudgetExhausted):
        burn_exact(comb(6, 6).to_general(), OracleConfig(node_budget=3))


def test_rejects_disconnected_and_empty():
    with pytest.raises(ValueError):
        burn_exact(GeneralGraph.from_edges(3, [(0, 1)]))
    with pytest.raises(ValueError):
        burn_exact(GeneralGraph.from_edges(0, []))
    with pytest.raises(ValueError):
        OracleConfig(node_budget=0)


def test_result_json():
    res = OracleResult(2, (0, 3))
    assert res.to_json() == {"k": 2, "witness": [0, 3]}


@given(connected_graphs(6))
def test_burning_number_at_most_radius_plus_one(g):
    # one fire at a center vertex burns everything in radius + 1 rounds
    nx_g = nx.Graph(g.edges())
    nx_g.add_nodes_from(range(g.num_vertices))
    assert burning_number_exact(g) <= nx.radius(nx_g) + 1
