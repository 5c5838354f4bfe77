import random
from math import isqrt

import pytest

from burnlab.corpus import atlas_connected, random_connected_graph, random_spanning_pair
from burnlab.graph import (
    Graph, DisconnectedGraphError, SizeLimitError, complete_graph, cycle_graph, path_graph,
    spider_graph, structural_stats, wheel_graph, min_dominating_set,
)
from burnlab.process import necessity_check, simulate
from burnlab.solver import (
    burning_1, burning_number, lower_bound, replay_ok, solve, source_number,
)
from burnlab.specs import generate, parse_spec

from oracles import enumerate_all_sequences, naive_burning_number, naive_source_number

ATLAS = atlas_connected(7)


def _ceil_sqrt(x):
    s = isqrt(x)
    return s if s * s == x else s + 1


@pytest.mark.parametrize("text,b", [("path:7", 5), ("wheel:8", 4), ("path:1", 1),
                                    ("cart(cycle:4,cycle:4)", 5)])
def test_burning_examples(text, b):
    g = generate(parse_spec(text))
    res = burning_number(g, 2)
    assert res.value == b and res.exact
    assert replay_ok(g, res)


@pytest.mark.parametrize("text,b,t", [("cart(cycle:4,cycle:4)", 5, 4), ("complete:5", 3, 2),
                                      ("cycle:6", 4, 3)])
def test_source_examples(text, b, t):
    g = generate(parse_spec(text))
    res = source_number(g, 2, b)
    assert res.value == t
    assert replay_ok(g, res, b)


def test_source_number_rejects_wrong_b():
    with pytest.raises(ValueError):
        source_number(path_graph(7), 2, b=4)


@pytest.mark.parametrize("n,b", [(9, 3), (10, 4), (1, 1)])
def test_burning_1_examples(n, b):
    g = path_graph(1) if n == 1 else cycle_graph(n)
    assert burning_1(g).value == b


def test_lower_bound_examples():
    assert lower_bound(cycle_graph(12)) == 6
    assert lower_bound(complete_graph(5)) == 1
    assert lower_bound(spider_graph((4, 4, 4, 2, 2))) == 5 + 3
    assert lower_bound(cycle_graph(12), r=1) == 1


def test_lower_bound_below_source_number_on_spiders():
    # lower_bound counts forced sources, so it never exceeds t_2
    from itertools import combinations_with_replacement
    for count in (3, 4):
        for legs in combinations_with_replacement(range(1, 5), count):
            g = spider_graph(legs)
            if g.n > 12:
                continue
            b, t = solve(g)
            assert lower_bound(g) <= t.value <= b.value


def test_refusals():
    with pytest.raises(DisconnectedGraphError):
        burning_number(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(SizeLimitError):
        burning_number(path_graph(31))


def test_unknown_above_limit():
    # the structural bound already exceeds the round limit
    res = burning_number(path_graph(12), 2, limit=5)
    assert res.value is None and res.unknown_above >= 5 and res.witness is None
    res = burning_number(cycle_graph(9), 1, limit=2)
    assert res.value is None and res.unknown_above == 2
    res = burning_number(generate(parse_spec("cart(path:5,path:5)")), 2, max_nodes=50)
    assert res.value is None and res.unknown_above is not None


def test_general_threshold():
    # r = 3 on K_4: three sources, then the last vertex follows
    b, t = solve(complete_graph(4), 3)
    assert (b.value, t.value) == (4, 3)
    assert replay_ok(complete_graph(4), b)


@pytest.mark.parametrize("r", [1, 2])
def test_matches_state_enumeration_on_atlas(r):
    for name, g in ATLAS:
        b, t = solve(g, r)
        assert b.value == naive_burning_number(g, r), name
        assert replay_ok(g, b) and replay_ok(g, t, b.value), name
        if g.n <= 6:
            assert t.value == naive_source_number(g, r, b.value), name


@pytest.mark.parametrize("r", [1, 2])
def test_matches_literal_enumeration_small(r):
    for name, g in atlas_connected(5):
        b, t = solve(g, r)
        assert (b.value, t.value) == enumerate_all_sequences(g, r, g.n), name


def test_witness_is_lexicographically_first():
    # 0,1,... cannot finish C_6 in four rounds, so 0,2,4 is the first witness
    g = cycle_graph(6)
    res = burning_number(g)
    assert list(res.witness) == [0, 2, 4]
    assert all(simulate(g, [0, 1, a, b]).rd != 4 for a in range(6) for b in range(6))


SPANNING_PAIRS = 200


def _spanning_pairs():
    rng = random.Random(2024)
    return [random_spanning_pair(rng, 10) for _ in range(SPANNING_PAIRS)]


def test_spanning_subgraph_burning_number_monotone():
    for g, h in _spanning_pairs():
        assert burning_number(g).value <= burning_number(h).value


@pytest.mark.xfail(strict=True, reason="t_2 is measured at b_2, which can drop when edges are "
                                       "added; see test_bowtie_source_number_not_monotone")
def test_spanning_subgraph_source_number_monotone():
    for g, h in _spanning_pairs():
        assert solve(g)[1].value <= solve(h)[1].value


def test_bowtie_source_number_not_monotone():
    # two triangles sharing vertex 4; the extra edge 0-2 makes three rounds possible
    h = Graph.from_edges(5, [(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)])
    g = Graph.from_edges(5, h.edges() + [(0, 2)])
    assert (naive_burning_number(h), naive_source_number(h, 2, 4)) == (4, 2)
    assert (naive_burning_number(g), naive_source_number(g, 2, 3)) == (3, 3)
    assert [r.value for r in solve(h)] == [4, 2]
    assert [r.value for r in solve(g)] == [3, 3]


def test_dominating_set_bound():
    # b_2(G) <= gamma(G) + b_1(G - D) for a minimum dominating set D with G - D connected
    rng = random.Random(99)
    checked = 0
    while checked < 60:
        g = random_connected_graph(rng, rng.randint(3, 12))
        d = min_dominating_set(g)
        rest = g.induced(v for v in range(g.n) if v not in d)
        if rest.n == 0 or not rest.is_connected():
            continue
        checked += 1
        assert burning_number(g).value <= len(d) + burning_1(rest).value


def test_solver_witness_properties():
    rng = random.Random(5)
    for _ in range(80):
        g = random_connected_graph(rng, rng.randint(1, 11))
        b, t = solve(g)
        assert t.value <= b.value
        assert b.value >= structural_stats(g)["leaves"]
        for res in (b, t):
            assert necessity_check(g, res.witness) == []
            tr = simulate(g, res.witness)
            assert tr.rd == b.value
        assert len(t.witness) == t.value


def test_stats_reported():
    b = burning_number(wheel_graph(10))
    assert {"nodes", "memo_hits", "wall_time"} <= set(b.stats)


def test_burning_1_cycles():
    for n in range(3, 21):
        assert burning_1(cycle_graph(n)).value == _ceil_sqrt(n)
