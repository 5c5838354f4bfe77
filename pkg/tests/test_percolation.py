import random

import pytest

from burnlab.corpus import random_connected_graph, random_corpus
from burnlab.graph import (
    Graph, DisconnectedGraphError, SizeLimitError, cartesian, complete_graph, cycle_graph, path_graph,
)
from burnlab.percolation import min_percolating, percolate, sandwich_check

from oracles import naive_min_percolating


def test_percolate_examples():
    assert percolate(cycle_graph(4), {0, 2}) == 1
    assert percolate(complete_graph(6), {0, 1}) == 1
    assert percolate(path_graph(4), {0}) is None
    assert percolate(path_graph(3), {0, 1, 2}) == 0


@pytest.mark.parametrize("n", range(3, 9))
def test_complete(n):
    res = min_percolating(complete_graph(n))
    assert (res.m, res.tau) == (2, 1)


def test_grid_diagonal():
    for n in range(2, 6):
        g = cartesian(path_graph(n), path_graph(n))
        res = min_percolating(g)
        assert res.m == n
        diagonal = [i * n + i for i in range(n)]
        assert percolate(g, diagonal) is not None


def test_c4():
    res = min_percolating(cycle_graph(4))
    assert (res.m, res.tau) == (2, 1)


def test_full_seed_has_zero_rounds():
    res = min_percolating(path_graph(2))
    assert (res.m, res.tau, res.witness_set) == (2, 0, (0, 1))


def test_matches_subset_oracle():
    rng = random.Random(17)
    for _ in range(120):
        g = random_connected_graph(rng, rng.randint(1, 9))
        for r in (1, 2, 3):
            res = min_percolating(g, r)
            assert (res.m, res.tau) == naive_min_percolating(g, r)
            assert percolate(g, res.witness_set, r) == res.tau
            # no smaller set works: every (m-1)-subset was rejected by the oracle above


def test_closure_monotone_in_seed():
    rng = random.Random(23)
    for _ in range(300):
        g = random_connected_graph(rng, rng.randint(2, 12))
        a = {v for v in range(g.n) if rng.random() < 0.4}
        b = a | {v for v in range(g.n) if rng.random() < 0.3}
        ta = percolate(g, a)
        if ta is not None:
            assert percolate(g, b) <= ta


def test_tau_positive_when_proper():
    for g in random_corpus(100, 9, seed=5, min_n=3):
        res = min_percolating(g)
        if res.m < g.n:
            assert res.tau >= 1


def test_sandwich_examples():
    rep = sandwich_check(complete_graph(5))
    assert (rep.m, rep.t2, rep.b2, rep.tau) == (2, 2, 3, 1)
    assert rep.holds and rep.tight == (True, False, True)
    rep = sandwich_check(cycle_graph(6))
    assert (rep.m, rep.t2, rep.b2) == (3, 3, 4) and rep.tight[0]
    rep = sandwich_check(path_graph(2))
    assert (rep.m, rep.t2, rep.b2, rep.tau) == (2, 2, 2, 0)
    assert "m=2" in rep.describe()


def test_refusals():
    with pytest.raises(DisconnectedGraphError):
        min_percolating(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(SizeLimitError):
        min_percolating(path_graph(26))
