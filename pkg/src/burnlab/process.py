"""The r-burning round loop.

At round ``j >= 1``: the ``j``-th source (if any, and if still uncolored)
turns blue, and every uncolored vertex with at least ``r`` blue neighbours
at round ``j-1`` turns blue. Both steps read the round ``j-1`` state, so a
source never helps spread in the round it is placed. The loop ends when
every vertex is blue, or when the sequence is used up and a round passes
with no change (a stall).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .graph import Graph, GraphError, bits, degree2_chains


def spread(adj: Sequence[int], blue: int, r: int) -> int:
    """Uncolored vertices having at least ``r`` neighbours in ``blue``."""
    if r == 1:
        reach = 0
        for v in bits(blue):
            reach |= adj[v]
        return reach & ~blue
    if r == 2:
        once = twice = 0
        x = blue
        while x:
            low = x & -x
            a = adj[low.bit_length() - 1]
            twice |= once & a
            once |= a
            x ^= low
        return twice & ~blue
    # bit-sliced saturating counter: level[i] = "at least i+1 blue neighbours"
    level = [0] * r
    for v in bits(blue):
        a = adj[v]
        for i in range(r - 1, 0, -1):
            level[i] |= level[i - 1] & a
        level[0] |= a
    return level[r - 1] & ~blue


@dataclass(frozen=True)
class BurnSequence:
    """Sources fed to the process, one per round. Repeats are allowed."""

    sources: tuple[int, ...]
    r: int = 2

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(int(s) for s in self.sources))
        if self.r < 1:
            raise GraphError("threshold r must be >= 1")

    def __len__(self) -> int:
        return len(self.sources)

    def __iter__(self):
        return iter(self.sources)


@dataclass
class BurnTrace:
    """Blue sets ``B_0, B_1, ..., B_T`` (``B_0`` empty) and how the run ended."""

    rounds: list[int]
    rd: int | None
    stalled_at: int | None
    consumed: int
    n: int = field(repr=False, default=0)

    @property
    def completed(self) -> bool:
        return self.rd is not None

    def new_blue(self, j: int) -> list[int]:
        return list(bits(self.rounds[j] & ~self.rounds[j - 1]))


def _as_sequence(seq, r: int | None) -> BurnSequence:
    if isinstance(seq, BurnSequence):
        return seq if r is None or r == seq.r else BurnSequence(seq.sources, r)
    return BurnSequence(tuple(seq), 2 if r is None else r)


def simulate(g: Graph, seq: BurnSequence | Iterable[int], r: int | None = None) -> BurnTrace:
    """Run the burning loop on ``g`` with the given sources."""
    s = _as_sequence(seq, r)
    for v in s.sources:
        if not 0 <= v < g.n:
            raise GraphError(f"source {v} is not a vertex of a {g.n}-vertex graph")
    full = g.full
    m = len(s.sources)
    blue = 0
    rounds = [0]
    if g.n == 0:
        return BurnTrace(rounds, 0, None, 0, 0)
    j = 0
    while True:
        j += 1
        new = spread(g.adj, blue, s.r)
        if j <= m:
            new |= (1 << s.sources[j - 1]) & ~blue
        blue |= new
        rounds.append(blue)
        if blue == full:
            return BurnTrace(rounds, j, None, min(j, m), g.n)
        if j > m and not new:
            return BurnTrace(rounds, None, j, m, g.n)


def rd(trace: BurnTrace) -> int | None:
    """Rounds to full blue, or ``None`` if the run stalled."""
    return trace.rd


class Violation(NamedTuple):
    kind: str  # "leaf" or "deg2-pair"
    vertices: tuple[int, ...]


def necessity_check(g: Graph, seq: BurnSequence | Iterable[int]) -> list[Violation]:
    """Necessary conditions for a 2-burning sequence; empty list means none violated.

    Every leaf must be a source, and of two adjacent degree-2 vertices at
    least one must be a source. Any violation means the run will stall.
    """
    s = _as_sequence(seq, None)
    if s.r != 2:
        raise ValueError("necessity conditions are only valid for r = 2")
    sourced = set(s.sources)
    out = []
    for v in range(g.n):
        if g.degree(v) == 1 and v not in sourced:
            out.append(Violation("leaf", (v,)))
    for order, is_cycle in degree2_chains(g):
        pairs = list(zip(order, order[1:]))
        if is_cycle:
            pairs.append((order[-1], order[0]))
        for a, b in pairs:
            if a not in sourced and b not in sourced:
                out.append(Violation("deg2-pair", (min(a, b), max(a, b))))
    out.sort()
    return out
