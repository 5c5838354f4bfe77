"""Extremal r-neighbour bootstrap percolation.

All seeds are blue at round 0; afterwards the same threshold spread as the
burning process runs synchronously. ``m(G, r)`` is the smallest percolating
seed set and ``tau(G, r)`` the fewest rounds to full blue over *all*
minimum percolating sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, SizeLimitError, mask_of
from .process import spread

PERCOLATION_VERTEX_LIMIT = 25


@dataclass
class PercolationResult:
    m: int
    witness_set: tuple[int, ...]
    tau: int
    count: int  # number of minimum percolating sets


def percolate(g: Graph, seed: Iterable[int] | int, r: int = 2) -> int | None:
    """Rounds until every vertex is blue, or ``None`` if spread stops short."""
    blue = seed if isinstance(seed, int) else mask_of(seed)
    return _rounds(g.adj, blue, g.full, r)


def _rounds(adj, blue: int, full: int, r: int) -> int | None:
    t = 0
    while blue != full:
        new = spread(adj, blue, r)
        if not new:
            return None
        blue |= new
        t += 1
    return t


def min_percolating(g: Graph, r: int = 2, limit: int = PERCOLATION_VERTEX_LIMIT) -> PercolationResult:
    """Exact ``m(G, r)`` and ``tau(G, r)`` by cardinality-increasing enumeration.

    Vertices of degree below ``r`` can never be reached by spread, so they
    are in every percolating set and are fixed up front. The reported
    witness is the lexicographically first minimum set attaining ``tau``.
    """
    g.require_connected()
    if g.n > limit:
        raise SizeLimitError(f"min_percolating is exact only up to {limit} vertices (got {g.n})")
    forced = [v for v in range(g.n) if g.degree(v) < r]
    free = [v for v in range(g.n) if g.degree(v) >= r]
    base = mask_of(forced)
    adj, full = g.adj, g.full
    for extra in range(len(free) + 1):
        best = None
        count = 0
        for combo in combinations(free, extra):
            t = _rounds(adj, base | mask_of(combo), full, r)
            if t is None:
                continue
            count += 1
            if best is None or t < best[0]:
                best = (t, combo)
        if best is not None:
            seeds = tuple(sorted(forced + list(best[1])))
            return PercolationResult(len(seeds), seeds, best[0], count)
    raise AssertionError("the full vertex set always percolates")


@dataclass
class SandwichReport:
    """``m(G,2) <= t_2(G) <= b_2(G) <= m(G,2) + tau(G,2)`` evaluated exactly."""

    m: int
    t2: int
    b2: int
    tau: int
    holds: bool
    tight: tuple[bool, bool, bool]

    def describe(self) -> str:
        ops = ["=" if t else "<" for t in self.tight]
        return (f"m={self.m} {ops[0]} t2={self.t2} {ops[1]} b2={self.b2} "
                f"{ops[2]} m+tau={self.m + self.tau}")


def sandwich_check(g: Graph, **solver_kw) -> SandwichReport:
    from .solver import solve

    perc = min_percolating(g, 2)
    b, t = solve(g, 2, **solver_kw)
    if b.value is None or t.value is None:
        raise SizeLimitError("burning solver gave up on this instance")
    chain = (perc.m, t.value, b.value, perc.m + perc.tau)
    holds = chain[0] <= chain[1] <= chain[2] <= chain[3]
    tight = (chain[0] == chain[1], chain[1] == chain[2], chain[2] == chain[3])
    return SandwichReport(perc.m, t.value, b.value, perc.tau, holds, tight)
