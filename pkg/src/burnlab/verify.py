"""Verification suites: closed forms and bounds checked against the exact solver.

Each suite expands into a list of picklable tasks; every task returns a
list of :class:`Row`. Tasks are evaluated in order (optionally by a
process pool, which preserves order) so reports are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import specs as sp
from .corpus import DEFAULT_SEED, atlas_connected, random_corpus
from .families import closed_form, corona_answer, FamilyAnswer
from .graph import Graph, cartesian, corona, path_graph
from .percolation import min_percolating, percolate
from .process import necessity_check, simulate
from .solver import replay_ok, solve

COLUMNS = ("spec", "quantity", "formula", "solver", "agree", "replay_ok", "wall_time")

SUITES = ("paths", "cycles", "complete", "bipartite", "spiders", "wheels",
          "coronas", "products", "percolation")

# default caps, chosen so that `verify all` runs in well under a minute
DEFAULT_CAPS = {
    "paths": {"max_n": 15},
    "cycles": {"max_n": 15},
    "complete": {"max_n": 8},
    "bipartite": {"max_n": 6},
    "spiders": {"max_vertices": 13},
    "wheels": {"max_n": 14},
    "coronas": {"max_n": 6},
    "products": {"max_vertices": 20},
    "percolation": {"max_n": 9, "count": 200},
}


@dataclass
class Row:
    spec: str
    quantity: str
    formula: str
    solver: str
    agree: bool
    replay_ok: bool
    wall_time: float | None = None

    def cells(self, timing: bool) -> list[str]:
        wt = "" if not timing or self.wall_time is None else f"{self.wall_time:.4f}"
        return [self.spec, self.quantity, self.formula, self.solver,
                str(self.agree).lower(), str(self.replay_ok).lower(), wt]

    def as_dict(self, timing: bool) -> dict:
        return {"spec": self.spec, "quantity": self.quantity, "formula": self.formula,
                "solver": self.solver, "agree": self.agree, "replay_ok": self.replay_ok,
                "wall_time": round(self.wall_time, 4) if timing and self.wall_time is not None else None}

    @property
    def ok(self) -> bool:
        return self.agree and self.replay_ok


def _witness_ok(g: Graph, seq, allowed) -> bool:
    """A construction replays to a round count inside ``allowed`` and passes the necessity check."""
    tr = simulate(g, seq)
    return tr.rd is not None and tr.rd in allowed and not necessity_check(g, seq)


def answer_rows(name: str, g: Graph, ans: FamilyAnswer) -> list[Row]:
    """Two rows (b2, t2) comparing a family answer with the exact solver."""
    start = time.perf_counter()
    b, t = solve(g, 2)
    elapsed = time.perf_counter() - start
    if b.value is None or t.value is None:
        return [Row(name, q, str(f), "unknown", False, False, elapsed)
                for q, f in (("b2", ans.b2), ("t2", ans.t2))]
    b_replay = replay_ok(g, b) and not necessity_check(g, b.witness)
    if ans.witness is not None:
        b_replay = b_replay and _witness_ok(g, ans.witness, ans.b2)
    t_replay = replay_ok(g, t, b.value) and not necessity_check(g, t.witness)
    return [
        Row(name, "b2", str(ans.b2), str(b.value), b.value in ans.b2, b_replay, elapsed),
        Row(name, "t2", str(ans.t2), str(t.value), t.value in ans.t2, t_replay, elapsed),
    ]


def family_task(text: str) -> list[Row]:
    spec = sp.parse_spec(text)
    return answer_rows(str(spec), sp.generate(spec), closed_form(spec))


def corona_task(item: tuple[str, Graph]) -> list[Row]:
    name, base = item
    return answer_rows(f"corona({name})", corona(base), corona_answer(base))


def construction_task(item: tuple[str, tuple[int, ...], int]) -> list[Row]:
    """A fixed witness (given in canonical numbering) must finish in the stated rounds."""
    text, seq, expected = item
    g = sp.generate(sp.parse_spec(text))
    start = time.perf_counter()
    tr = simulate(g, seq)
    got = "stalled" if tr.rd is None else str(tr.rd)
    return [Row(text, "witness_rd " + ",".join(map(str, seq)), str(expected), got,
                tr.rd == expected, tr.completed, time.perf_counter() - start)]


def percolation_constant_task(item: tuple[str, str, int]) -> list[Row]:
    text, quantity, expected = item
    g = sp.generate(sp.parse_spec(text))
    start = time.perf_counter()
    res = min_percolating(g, 2)
    got = res.m if quantity == "m" else res.tau
    ok = percolate(g, res.witness_set, 2) == res.tau
    return [Row(text, quantity, str(expected), str(got), got == expected, ok,
                time.perf_counter() - start)]


def sandwich_task(item: tuple[str, Graph]) -> list[Row]:
    name, g = item
    start = time.perf_counter()
    perc = min_percolating(g, 2)
    b, t = solve(g, 2)
    elapsed = time.perf_counter() - start
    formula = "m<=t2<=b2<=m+tau"
    if b.value is None or t.value is None:
        return [Row(name, "sandwich", formula, "unknown", False, False, elapsed)]
    chain = (perc.m, t.value, b.value, perc.m + perc.tau)
    holds = chain[0] <= chain[1] <= chain[2] <= chain[3]
    replays = (percolate(g, perc.witness_set, 2) == perc.tau
               and replay_ok(g, b) and replay_ok(g, t, b.value))
    return [Row(name, "sandwich", formula, "<=".join(map(str, chain)), holds, replays, elapsed)]


def _spider_legs(max_vertices: int):
    """Non-increasing leg tuples with at least three legs and at most ``max_vertices`` vertices."""
    budget = max_vertices - 1
    out = []
    for count in range(3, budget + 1):
        for legs in combinations_with_replacement(range(1, budget + 1), count):
            if sum(legs) <= budget:
                out.append(tuple(sorted(legs, reverse=True)))
    return sorted(set(out), key=lambda t: (sum(t), len(t), t))


def _product_factors(max_vertices: int) -> list[str]:
    top = max_vertices // 2
    return ([f"path:{i}" for i in range(2, top + 1)]
            + [f"cycle:{i}" for i in range(3, top + 1)]
            + [f"complete:{i}" for i in range(3, top + 1)])


def _encode(g: Graph) -> str:
    return f"{g.n}:" + ";".join(f"{u}-{v}" for u, v in g.edges())


def suite_tasks(suite: str, caps: dict, seed: int = DEFAULT_SEED) -> list[tuple]:
    """``[(function, argument), ...]`` for one suite under the given caps."""
    if suite == "paths":
        return [(family_task, f"path:{n}") for n in range(1, caps["max_n"] + 1)]
    if suite == "cycles":
        return [(family_task, f"cycle:{n}") for n in range(3, caps["max_n"] + 1)]
    if suite == "complete":
        return [(family_task, f"complete:{n}") for n in range(1, caps["max_n"] + 1)]
    if suite == "bipartite":
        top = caps["max_n"]
        return [(family_task, f"kbip:{m},{n}") for m in range(1, top + 1) for n in range(m, top + 1)]
    if suite == "spiders":
        return [(family_task, "spider:" + ",".join(map(str, legs)))
                for legs in _spider_legs(caps["max_vertices"])]
    if suite == "wheels":
        tasks = [(family_task, f"wheel:{n}") for n in range(3, caps["max_n"] + 1)]
        # rim sources written 1-based around the cycle, shifted to vertex ids
        tasks.append((construction_task, ("wheel:26", (0, 7, 14, 20), 6)))
        tasks.append((construction_task, ("wheel:30", (0, 7, 14, 20, 24, 26), 6)))
        return tasks
    if suite == "coronas":
        return [(corona_task, item) for item in atlas_connected(caps["max_n"])]
    if suite == "products":
        factors = _product_factors(caps["max_vertices"])
        tasks = []
        for i, a in enumerate(factors):
            for b in factors[i:]:
                if sp.parse_spec(a).order * sp.parse_spec(b).order <= caps["max_vertices"]:
                    tasks.append((family_task, f"cart({a},{b})"))
        tasks.append((construction_task, ("cart(path:4,path:3)", (0, 4, 8, 10, 9), 5)))
        return tasks
    if suite == "percolation":
        tasks = []
        for n in range(3, 9):
            tasks.append((percolation_constant_task, (f"complete:{n}", "m", 2)))
            tasks.append((percolation_constant_task, (f"complete:{n}", "tau", 1)))
        for n in range(2, 6):
            tasks.append((percolation_constant_task, (f"cart(path:{n},path:{n})", "m", n)))
        corpus = random_corpus(caps["count"], caps["max_n"], seed)
        tasks += [(sandwich_task, (f"random#{i}[{_encode(g)}]", g)) for i, g in enumerate(corpus)]
        return tasks
    raise ValueError(f"unknown suite {suite!r}")


def _run(task):
    fn, arg = task
    return fn(arg)


def run_tasks(tasks: list[tuple], jobs: int = 1) -> list[Row]:
    if jobs > 1 and len(tasks) > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            chunks = pool.map(_run, tasks, chunksize=1)
    else:
        chunks = [_run(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def grid_rows(n_min: int, n_max: int, max_nodes: int | None) -> list[dict]:
    """``b_2(P_n [] P_n)`` against the bounds ``n`` and ``2n``; unknown past the node budget."""
    from .solver import EXACT_VERTEX_LIMIT, burning_number

    out = []
    for n in range(n_min, n_max + 1):
        g = cartesian(path_graph(n), path_graph(n))
        value = None
        witness = None
        if g.n <= EXACT_VERTEX_LIMIT:
            res = burning_number(g, 2, max_nodes=max_nodes)
            value = res.value
            witness = res.witness
        ok = value is None or (n <= value <= 2 * n and simulate(g, witness).rd == value)
        out.append({"n": n, "lower": n, "exact": value, "upper": 2 * n, "ok": ok})
    return out


__all__ = ["COLUMNS", "SUITES", "DEFAULT_CAPS", "Row", "suite_tasks", "run_tasks",
           "grid_rows", "answer_rows"]
