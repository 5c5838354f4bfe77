"""Acceptance criteria 1-9, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""

import random
import time
from itertools import combinations_with_replacement
from math import isqrt

import pytest

from burnlab.corpus import atlas_connected, random_corpus, random_spanning_pair
from burnlab.families import closed_form, corona_sequence, product_bounds
from burnlab.graph import (
    cartesian, complete_bipartite_graph, complete_graph, corona, cycle_graph, path_graph,
    spider_graph, wheel_graph,
)
from burnlab.percolation import min_percolating
from burnlab.process import necessity_check, simulate
from burnlab.solver import burning_1, burning_number, replay_ok, solve
from burnlab.specs import cart, complete, cycle, generate, kbip, path, spider

from oracles import naive_burning_number


def ceil_half(n):
    return (n + 1) // 2


def ceil_sqrt(x):
    s = isqrt(x)
    return s if s * s == x else s + 1


def exact_pair(g):
    b, t = solve(g, 2)
    assert replay_ok(g, b) and replay_ok(g, t, b.value)
    return b.value, t.value


class Check:
    """Collects failures for one criterion instead of stopping at the first."""

    def __init__(self):
        self.failures = []
        self.count = 0
        self.start = time.perf_counter()

    def expect(self, cond, what):
        self.count += 1
        if not cond:
            self.failures.append(what)

    def finish(self, number, acceptance, summary):
        elapsed = time.perf_counter() - self.start
        ok = not self.failures
        detail = f"{summary}; {self.count} checks in {elapsed:.1f}s"
        if not ok:
            detail += f"; failures: {self.failures[:5]}"
        acceptance(number, ok, detail)
        assert ok, self.failures[:10]
        return elapsed


def test_criterion_1_paths_and_cycles(acceptance):
    c = Check()
    for n in range(2, 16):
        b, t = exact_pair(path_graph(n))
        c.expect(b == ceil_half(n) + 1, f"b2(P{n})={b}")
        c.expect(t == (ceil_half(n) + 1 if n % 2 == 0 else ceil_half(n)), f"t2(P{n})={t}")
        c.expect(closed_form(path(n)).b2.value == b and closed_form(path(n)).t2.value == t, f"P{n}")
        if n >= 3:
            b, t = exact_pair(cycle_graph(n))
            c.expect(b == ceil_half(n) + 1, f"b2(C{n})={b}")
            c.expect(t == ceil_half(n), f"t2(C{n})={t}")
            c.expect(closed_form(cycle(n)).t2.value == t, f"C{n}")
    elapsed = c.finish(1, acceptance, "b2 and t2 of P_n, C_n for n <= 15 match the formulas")
    assert elapsed < 30


def test_criterion_2_named_instances(acceptance):
    c = Check()
    for g, want, name in [(path_graph(7), 5, "P7"), (path_graph(12), 7, "P12"),
                          (wheel_graph(8), 4, "W8")]:
        c.expect(exact_pair(g)[0] == want, f"b2({name})")
    for n in range(3, 9):
        c.expect(exact_pair(complete_graph(n)) == (3, 2), f"K{n}")
    for m in range(2, 7):
        for n in range(2, 7):
            want = 4 if m >= 4 and n >= 4 else 3
            b, _ = exact_pair(complete_bipartite_graph(m, n))
            c.expect(b == want, f"b2(K{m},{n})={b}")
            c.expect(closed_form(kbip(m, n)).b2.value == want, f"closed K{m},{n}")
    c.finish(2, acceptance, "P7, P12, W8, K_n (3..8), K_{m,n} (2..6) solver-verified")


def _spiders(max_vertices):
    seen = set()
    for count in range(3, max_vertices):
        for legs in combinations_with_replacement(range(1, max_vertices), count):
            if sum(legs) + 1 <= max_vertices:
                seen.add(tuple(sorted(legs, reverse=True)))
    return sorted(seen)


def test_criterion_3_spiders(acceptance):
    c = Check()
    shapes = _spiders(13)
    for legs in shapes:
        n = sum(legs) + 1
        k = sum(x % 2 for x in legs)
        b_formula = ceil_half(n) + 1 if k <= 2 else (n + k - 1) // 2
        t_formula = b_formula - 1 if k in (0, 2) else b_formula
        b, t = exact_pair(spider_graph(legs))
        c.expect(b == b_formula, f"b2{legs}={b} vs {b_formula}")
        c.expect(t == t_formula, f"t2{legs}={t} vs {t_formula}")
        ans = closed_form(spider(*legs))
        c.expect((ans.b2.value, ans.t2.value) == (b, t), f"closed form {legs}")
    elapsed = c.finish(3, acceptance, f"{len(shapes)} spiders with <= 13 vertices")
    assert elapsed < 300


def test_criterion_4_wheels(acceptance):
    c = Check()
    for n in range(4, 15):
        b, t = exact_pair(wheel_graph(n))
        k = ceil_sqrt(n + 6)
        c.expect(b == (3 if n == 4 else k), f"b2(W{n})={b}")
        m = next(m for m in range(1, k + 1) if m * (2 * k - m) >= n + 6)
        c.expect(t == m, f"t2(W{n})={t} vs m={m}")
    # known witnesses written as rim positions 1..n; vertex id = position - 1
    for n, positions in [(30, (1, 8, 15, 21, 25, 27)), (26, (1, 8, 15, 21))]:
        rd = simulate(wheel_graph(n), [p - 1 for p in positions]).rd
        c.expect(rd == 6, f"W{n} witness rd={rd}")
    b, t = exact_pair(wheel_graph(11))
    c.expect(b - t == 2, f"gap on W11 = {b - t}")
    c.finish(4, acceptance, "W_4..W_14 values, W_26/W_30 witnesses, gap 2 on W_11")


def test_criterion_5_products(acceptance):
    c = Check()
    for m, n in [(5, 3), (4, 4)]:
        c.expect(exact_pair(cartesian(complete_graph(m), complete_graph(n))) == (5, 2), f"K{m}xK{n}")
    start = time.perf_counter()
    c.expect(exact_pair(cartesian(cycle_graph(4), cycle_graph(4))) == (5, 4), "C4xC4")
    c4_time = time.perf_counter() - start
    grid = cartesian(path_graph(4), path_graph(3))
    c.expect(exact_pair(grid)[0] == 5, "b2(P4xP3)")
    staircase = [(u - 1) * 3 + (v - 1) for u, v in [(1, 1), (2, 2), (3, 3), (4, 2), (4, 1)]]
    c.expect(simulate(grid, staircase).rd == 5, "staircase sequence on P4xP3")
    factors = ([path(i) for i in range(2, 11)] + [cycle(i) for i in range(3, 11)]
               + [complete(i) for i in range(3, 11)])
    pairs = 0
    for i, a in enumerate(factors):
        for b in factors[i:]:
            if a.order * b.order > 20:
                continue
            pairs += 1
            bv, tv = exact_pair(generate(cart(a, b)))
            bounds = product_bounds(a, b)
            c.expect(bv in bounds.b2 and tv in bounds.t2,
                     f"{a}x{b}: b2={bv} in {bounds.b2}, t2={tv} in {bounds.t2}")
    c.finish(5, acceptance, f"exact products; bounds hold on {pairs} factor pairs; "
                            f"C4xC4 exhaustion {c4_time:.2f}s")
    assert c4_time < 600


def test_criterion_6_coronas(acceptance):
    c = Check()
    bases = atlas_connected(6)
    for name, base in bases:
        g = corona(base)
        n = base.n
        c.expect(exact_pair(g) == (n + 1, n + 1), f"corona {name}")
        c.expect(simulate(g, corona_sequence(base)).rd == n + 1, f"construction {name}")
    c.finish(6, acceptance, f"{len(bases)} connected bases with <= 6 vertices")


def test_criterion_7_percolation(acceptance):
    c = Check()
    for n in range(3, 9):
        res = min_percolating(complete_graph(n))
        c.expect((res.m, res.tau) == (2, 1), f"K{n}")
    for n in range(2, 6):
        c.expect(min_percolating(cartesian(path_graph(n), path_graph(n))).m == n, f"P{n}xP{n}")
    corpus = random_corpus(200, 9, seed=20240501)
    for i, g in enumerate(corpus):
        perc = min_percolating(g)
        b, t = exact_pair(g)
        c.expect(perc.m <= t <= b <= perc.m + perc.tau, f"sandwich on corpus graph {i}")
    c.finish(7, acceptance, f"K_n, grid diagonals, sandwich on {len(corpus)} random graphs")


def test_criterion_8_oracle_equivalence(acceptance):
    c = Check()
    graphs = atlas_connected(7)
    for r in (1, 2):
        for name, g in graphs:
            c.expect(burning_number(g, r).value == naive_burning_number(g, r), f"{name} r={r}")
    for n in range(3, 21):
        c.expect(burning_1(cycle_graph(n)).value == ceil_sqrt(n), f"b1(C{n})")
    c.finish(8, acceptance, f"{len(graphs)} atlas graphs x r in {{1,2}}; b1(C_n) for n <= 20")


class SourceNumberNotMonotone(AssertionError):
    pass


@pytest.mark.xfail(strict=True, raises=SourceNumberNotMonotone,
                   reason="t_2 can increase when edges are added (two triangles sharing a "
                          "vertex, plus one edge); every other part of this criterion is asserted")
def test_criterion_9_property_suites(acceptance):
    c = Check()
    rng = random.Random(31337)
    solved = 0
    graphs = [g for _, g in atlas_connected(6)] + random_corpus(150, 11, seed=4242)
    for g in graphs:
        b, t = solve(g)
        solved += 2
        c.expect(replay_ok(g, b) and replay_ok(g, t, b.value), "witness replay")
        c.expect(not necessity_check(g, b.witness) and not necessity_check(g, t.witness),
                 "necessity on witnesses")
    stalls = 0
    for g in random_corpus(400, 12, seed=777):
        seq = [rng.randrange(g.n) for _ in range(rng.randint(1, g.n))]
        if necessity_check(g, seq):
            stalls += 1
            c.expect(not simulate(g, seq).completed, "stall soundness")
    t_violations = []
    for _ in range(200):
        g, h = random_spanning_pair(rng, 10)
        (bg, tg), (bh, th) = exact_pair(g), exact_pair(h)
        c.expect(bg <= bh, "b2 spanning monotone")
        if tg > th:
            t_violations.append((g.edges(), h.edges(), bg, tg, bh, th))
    summary = (f"{solved} solver outputs replayed; {stalls} necessity violations all stalled; "
               f"200 spanning pairs: b2 monotone, t2 monotone fails on {len(t_violations)}")
    if t_violations:
        c.failures.append(f"t2 spanning monotonicity: {len(t_violations)} of 200 pairs")
    try:
        c.finish(9, acceptance, summary)
    except AssertionError:
        if c.failures == [f"t2 spanning monotonicity: {len(t_violations)} of 200 pairs"]:
            raise SourceNumberNotMonotone(t_violations[0])
        raise
