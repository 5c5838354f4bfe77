"""Exact r-burning number b_r(G) and source number t_r(G).

Search model
------------
A state is the blue set after some round together with the number of
rounds left. Each round picks one source among the *useful* vertices:
uncolored and not about to be colored by spread in that same round (a
source that spread would color anyway changes nothing). The process is
monotone in the blue set, so an idle round or a wasted (already blue)
entry is never better than a useful source while one exists; the only
idle rounds that survive are the trailing spread-only rounds after the
last source. Hence

* ``b_r``: iterative deepening on the round budget ``k``; every round
  places a useful source until spread alone finishes the graph;
* ``t_r``: for ``m = 1, 2, ...`` place useful sources in rounds ``1..m``
  and let spread run for the remaining ``b_r - m`` rounds.

Infeasible states are memoized (keyed on blue set and rounds left, and for
``t_r`` also the largest source budget known to fail). A state is cut when
a lower bound on the sources still needed exceeds the sources still
available. The bounds used:

* uncolored leaves plus a vertex cover of uncolored adjacent degree-2
  pairs (``r = 2`` only);
* an edge-potential bound, valid for every ``r``: ``2r|B| - 2e(B)`` never
  grows under threshold spread and grows by at most ``2r`` per source;
* at least ``r`` blue vertices are needed before anything spreads;
* a reach bound (``r = 1`` only): with ``R`` rounds left, a new source
  can only reach a ball of radius smaller than ``R``.

Witnesses are the lexicographically smallest source lists (by vertex id,
round by round) among sequences made of useful sources, because branches
are explored in increasing vertex order and the first success is kept.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graph import Graph, SizeLimitError, bits, degree2_chains, structural_stats
from .process import BurnSequence, simulate, spread

EXACT_VERTEX_LIMIT = 30


class NodeBudgetExceeded(Exception):
    pass


@dataclass
class SolveResult:
    """Exact value plus a replayable witness; ``value is None`` means unknown."""

    quantity: str  # "b" or "t"
    r: int
    value: int | None
    witness: BurnSequence | None
    stats: dict = field(default_factory=dict)
    unknown_above: int | None = None

    @property
    def exact(self) -> bool:
        return self.value is not None


class _Search:
    def __init__(self, g: Graph, r: int, max_nodes: int | None = None):
        self.g = g
        self.adj = g.adj
        self.n = g.n
        self.full = g.full
        self.r = r
        self.deg = [a.bit_count() for a in g.adj]
        self.max_nodes = max_nodes
        self.nodes = 0
        self.memo_hits = 0
        self.dead_b: set[int] = set()
        self.dead_t: dict[int, int] = {}
        self.shift = g.n + 1
        if r == 2:
            self.leafmask = 0
            for v, d in enumerate(self.deg):
                if d == 1:
                    self.leafmask |= 1 << v
            self.chains = [([1 << v for v in order], cyc) for order, cyc in degree2_chains(g)
                           if len(order) >= 2]
        if r == 1:
            self.balls = g.ball_sizes(g.n)

    # -- bounds -----------------------------------------------------------

    def demand(self, unc: int) -> int:
        """Lower bound on sources still needed when ``unc`` is the uncolored set."""
        if not unc:
            return 0
        r = self.r
        adj, deg = self.adj, self.deg
        size = unc.bit_count()
        sdeg = 0
        inner = 0
        x = unc
        while x:
            low = x & -x
            v = low.bit_length() - 1
            sdeg += deg[v]
            inner += (adj[v] & unc).bit_count()
            x ^= low
        # ceil((2r|U| - 2 sum deg + inner) / 2r)
        num = 2 * r * size - 2 * sdeg + inner
        best = -((-num) // (2 * r))
        blue = self.n - size
        if blue < r:
            best = max(best, min(size, r - blue))
        if r == 2:
            need = (unc & self.leafmask).bit_count()
            for chain, cyc in self.chains:
                run = 0
                first = -1
                total = 0
                for b in chain:
                    if unc & b:
                        run += 1
                    else:
                        if first < 0:
                            first = run
                        else:
                            total += run // 2
                        run = 0
                if first < 0:
                    # chain entirely uncolored
                    total = (run + 1) // 2 if cyc else run // 2
                elif cyc:
                    total += (run + first) // 2
                else:
                    total += first // 2 + run // 2
                need += total
            if need > best:
                best = need
        return best

    def reach_ok(self, blue: int, unc: int, rounds: int) -> bool:
        """r = 1: vertices out of reach of ``blue`` must fit in the future balls."""
        adj = self.adj
        grown = blue
        for _ in range(rounds):
            nxt = grown
            for v in bits(grown):
                nxt |= adj[v]
            if nxt == grown:
                break
            grown = nxt
        rest = (unc & ~grown).bit_count()
        if not rest:
            return True
        return rest <= sum(self.balls[d] for d in range(rounds))

    # -- b_r ----------------------------------------------------------------

    def feasible_b(self, blue: int, left: int):
        """Source list completing from ``blue`` within ``left`` rounds, or None."""
        if blue == self.full:
            return []
        if left == 0:
            return None
        key = blue | (left << self.shift)
        if key in self.dead_b:
            self.memo_hits += 1
            return None
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise NodeBudgetExceeded
        nb = blue | spread(self.adj, blue, self.r)
        if nb == self.full:
            return []
        cand = self.full & ~nb
        if left == 1:
            if cand & (cand - 1) == 0:
                return [cand.bit_length() - 1]
            self.dead_b.add(key)
            return None
        if self.demand(cand) > left or (self.r == 1 and not self.reach_ok(nb, cand, left)):
            self.dead_b.add(key)
            return None
        x = cand
        while x:
            low = x & -x
            found = self.feasible_b(nb | low, left - 1)
            if found is not None:
                found.append(low.bit_length() - 1)
                return found
            x ^= low
        self.dead_b.add(key)
        return None

    # -- t_r ----------------------------------------------------------------

    def tail_ok(self, blue: int, left: int) -> bool:
        adj, r, full = self.adj, self.r, self.full
        for _ in range(left):
            if blue == full:
                return True
            new = spread(adj, blue, r)
            if not new:
                return False
            blue |= new
        return blue == full

    def feasible_t(self, blue: int, left: int, sources: int):
        """Exactly ``sources`` useful sources in the next rounds, then spread only."""
        if blue == self.full:
            return []
        if sources == 0:
            return [] if self.tail_ok(blue, left) else None
        key = blue | (left << self.shift)
        if key in self.dead_b or self.dead_t.get(key, -1) >= sources:
            self.memo_hits += 1
            return None
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise NodeBudgetExceeded
        nb = blue | spread(self.adj, blue, self.r)
        if nb == self.full:
            return []
        cand = self.full & ~nb
        if self.demand(cand) > sources or (self.r == 1 and not self.reach_ok(nb, cand, left)):
            self.dead_t[key] = max(sources, self.dead_t.get(key, -1))
            return None
        x = cand
        while x:
            low = x & -x
            found = self.feasible_t(nb | low, left - 1, sources - 1)
            if found is not None:
                found.append(low.bit_length() - 1)
                return found
            x ^= low
        self.dead_t[key] = max(sources, self.dead_t.get(key, -1))
        return None

    def stats(self, start: float) -> dict:
        return {"nodes": self.nodes, "memo_hits": self.memo_hits,
                "wall_time": time.perf_counter() - start}


def lower_bound(g: Graph, r: int = 2) -> int:
    """Sound lower bound on b_r(G) from leaves and degree-2 chains (r = 2)."""
    if r != 2:
        return 1
    st = structural_stats(g)
    return max(st["leaves"] + st["deg2_chain_cover"], 1)


def _check(g: Graph, vertex_limit: int) -> None:
    g.require_connected()
    if g.n > vertex_limit:
        raise SizeLimitError(f"exact solver is limited to {vertex_limit} vertices (got {g.n})")


def _start_bound(search: _Search, g: Graph, r: int) -> int:
    return max(1, lower_bound(g, r), search.demand(g.full))


def burning_number(g: Graph, r: int = 2, limit: int | None = None, *,
                   max_nodes: int | None = None,
                   vertex_limit: int = EXACT_VERTEX_LIMIT) -> SolveResult:
    """b_r(G) by iterative deepening on the number of rounds.

    ``limit`` caps the rounds tried (default ``n``, always enough); past it,
    or past ``max_nodes`` search nodes, the result is reported unknown.
    """
    _check(g, vertex_limit)
    start = time.perf_counter()
    search = _Search(g, r, max_nodes)
    limit = g.n if limit is None else limit
    k = _start_bound(search, g, r)
    tried = k - 1
    try:
        while k <= limit:
            found = search.feasible_b(0, k)
            if found is not None:
                seq = BurnSequence(tuple(reversed(found)), r)
                return SolveResult("b", r, k, seq, search.stats(start))
            tried = k
            k += 1
    except NodeBudgetExceeded:
        pass
    return SolveResult("b", r, None, None, search.stats(start), unknown_above=tried)


def source_number(g: Graph, r: int = 2, b: int | None = None, *,
                  max_nodes: int | None = None,
                  vertex_limit: int = EXACT_VERTEX_LIMIT) -> SolveResult:
    """t_r(G): fewest sources among sequences finishing in exactly b_r(G) rounds."""
    _check(g, vertex_limit)
    start = time.perf_counter()
    if b is None:
        br = burning_number(g, r, max_nodes=max_nodes, vertex_limit=vertex_limit)
        if br.value is None:
            return SolveResult("t", r, None, None, br.stats, unknown_above=None)
        b = br.value
    search = _Search(g, r, max_nodes)
    st = structural_stats(g)
    m = max(1, st["leaves"] if r == 2 else 1, _start_bound(search, g, r))
    try:
        while m <= b:
            found = search.feasible_t(0, b, m)
            if found is not None:
                seq = BurnSequence(tuple(reversed(found)), r)
                return SolveResult("t", r, len(seq), seq, search.stats(start))
            m += 1
    except NodeBudgetExceeded:
        return SolveResult("t", r, None, None, search.stats(start), unknown_above=m - 1)
    raise ValueError(f"no sequence completes in {b} rounds; b is not the burning number")


def burning_1(g: Graph, limit: int | None = None, **kw) -> SolveResult:
    """The classical (r = 1) burning number."""
    return burning_number(g, 1, limit, **kw)


def solve(g: Graph, r: int = 2, **kw) -> tuple[SolveResult, SolveResult]:
    b = burning_number(g, r, **kw)
    if b.value is None:
        return b, SolveResult("t", r, None, None, {}, None)
    return b, source_number(g, r, b.value, **kw)


def replay_ok(g: Graph, result: SolveResult, b: int | None = None) -> bool:
    """Replay a witness: b results finish in ``value`` rounds, t results in ``b``."""
    if result.witness is None:
        return False
    trace = simulate(g, result.witness)
    if result.quantity == "b":
        return trace.rd == result.value
    return trace.rd == b and len(result.witness) == result.value
