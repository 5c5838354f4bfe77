"""Closed-form b_2 / t_2 values and constructive witnesses for graph families.

Every witness is expressed in the canonical numbering of
:mod:`burnlab.graph`. Where only bounds are known the answer is a
:class:`Range` with ``lo < hi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .graph import Graph, GraphError, spider_legs
from .process import BurnSequence, simulate
from .specs import FamilySpec, generate, wheel


class HypothesisError(GraphError):
    """A construction was asked for outside the hypotheses it is proved under."""


class FactorValuesUnknown(RuntimeError):
    pass


@dataclass(frozen=True)
class Range:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty range [{self.lo},{self.hi}]")

    @classmethod
    def exact(cls, v: int) -> "Range":
        return cls(v, v)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"{self} is not an exact value")
        return self.lo

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return str(self.lo) if self.is_exact else f"[{self.lo},{self.hi}]"


@dataclass
class FamilyAnswer:
    b2: Range
    t2: Range
    witness: BurnSequence | None = None
    provenance: dict = field(default_factory=dict)
    closed: bool = True


def ceil_sqrt(x: int) -> int:
    s = isqrt(x)
    return s if s * s == x else s + 1


def _half_up(n: int) -> int:
    return (n + 1) // 2


# ---------------------------------------------------------------------------
# paths, cycles, complete graphs

def _path(n: int) -> FamilyAnswer:
    if n == 1:
        return FamilyAnswer(Range.exact(1), Range.exact(1), BurnSequence((0,)),
                            {"b2": "single vertex", "t2": "single vertex"})
    b = _half_up(n) + 1
    t = b if n % 2 == 0 else _half_up(n)
    # every other vertex from one end; even paths also need the far leaf
    src = list(range(0, n, 2))
    if n % 2 == 0:
        src.append(n - 1)
    return FamilyAnswer(Range.exact(b), Range.exact(t), BurnSequence(tuple(src)),
                        {"b2": "path/cycle formula", "t2": "path source-count rule"})


def _cycle(n: int) -> FamilyAnswer:
    b = _half_up(n) + 1
    t = _half_up(n)
    src = tuple(range(0, n, 2))
    return FamilyAnswer(Range.exact(b), Range.exact(t), BurnSequence(src),
                        {"b2": "path/cycle formula", "t2": "cycle source-count rule"})


def _complete(n: int) -> FamilyAnswer:
    if n <= 2:
        return _path(n)
    return FamilyAnswer(Range.exact(3), Range.exact(2), BurnSequence((0, 1)),
                        {"b2": "complete graph values", "t2": "complete graph values"})


def _relabel(ans: FamilyAnswer, mapping: list[int]) -> FamilyAnswer:
    if ans.witness is not None:
        ans.witness = BurnSequence(tuple(mapping[v] for v in ans.witness.sources))
    return ans


def _kbip(m: int, n: int) -> FamilyAnswer:
    if min(m, n) == 1:
        # stars: K_{1,1} = P_2, K_{1,2} = P_3, otherwise a spider with unit legs
        big = max(m, n)
        centre = 0 if m == 1 else m
        others = [v for v in range(m + n) if v != centre]
        if big == 1:
            return _path(2)
        if big == 2:
            return _relabel(_path(3), [others[0], centre, others[1]])
        return _relabel(_spider((1,) * big), [centre] + others)
    b = 4 if m >= 4 and n >= 4 else 3
    if b == 3:
        side = range(m) if m in (2, 3) else range(m, m + n)
        src = tuple(side)
    else:
        src = (0, 1, m)
    return FamilyAnswer(Range.exact(b), Range(2, 3), BurnSequence(src),
                        {"b2": "complete bipartite values", "t2": "join upper bound"})


# ---------------------------------------------------------------------------
# spiders

def spider_values(legs) -> tuple[int, int, int]:
    """``(b2, t2, k)`` for the spider with the given leg lengths."""
    n = sum(legs) + 1
    k = sum(1 for x in legs if x % 2)
    if k <= 2:
        b = _half_up(n) + 1
    else:
        if (n + k - 1) % 2:
            raise AssertionError("n and k must have opposite parity")
        b = (n + k - 1) // 2
    t = b - 1 if k in (0, 2) else b
    return b, t, k


def _from_leaf(leg: list[int]) -> list[int]:
    """The leaf end and every other vertex walking back toward the hub."""
    return leg[::-1][::2]


def _odd_leaf_pair(leg: list[int]) -> list[int]:
    """Leaf, its neighbour, then every other vertex from that neighbour."""
    if len(leg) == 1:
        return [leg[0]]
    return [leg[-1]] + leg[-2::-2]


def spider_sequence(legs) -> list[int]:
    legs = tuple(legs)
    paths = spider_legs(legs)
    odd = [i for i, x in enumerate(legs) if x % 2]
    k = len(odd)
    if k == 0:
        rest = sorted(v for leg in paths for v in _from_leaf(leg))
        return [0] + rest
    if k == 1:
        h1 = paths[odd[0]]
        chosen = set(_odd_leaf_pair(h1))
        for i, leg in enumerate(paths):
            if i != odd[0]:
                chosen.update(_from_leaf(leg))
        y1 = h1[-1]
        return [0] + sorted(chosen - {y1}) + [y1]
    if k == 2:
        chosen = set(v for leg in paths for v in _from_leaf(leg))
        x1, x2 = paths[odd[0]][0], paths[odd[1]][0]
        return [x1, x2] + sorted(chosen - {x1, x2})
    h1 = paths[odd[0]]
    chosen = set(_odd_leaf_pair(h1))
    for i, leg in enumerate(paths):
        if i != odd[0]:
            chosen.update(_from_leaf(leg))
    x2, x3 = paths[odd[1]][0], paths[odd[2]][0]
    y1 = h1[-1]
    return [x2, x3] + sorted(chosen - {x2, x3, y1}) + [y1]


def _spider(legs) -> FamilyAnswer:
    b, t, k = spider_values(legs)
    case = "k<=2" if k <= 2 else "k>=3"
    return FamilyAnswer(Range.exact(b), Range.exact(t), BurnSequence(tuple(spider_sequence(legs))),
                        {"b2": f"spider closed form ({case})", "t2": "spider source-count rule"})


# ---------------------------------------------------------------------------
# wheels

def wheel_budget(n: int) -> tuple[int, int]:
    """``(k, m)``: rounds without using the hub, and the fewest sources for it.

    The minimum starts at 2: on ``W_5`` and ``W_6`` two rim sources at
    distance 2 or 3 already finish in ``k = 4`` rounds.
    """
    k = ceil_sqrt(n + 6)
    m = 2
    while m * (2 * k - m) < n + 6:
        m += 1
    return k, m


def wheel_positions(n: int) -> list[int]:
    """Rim positions (1-based, as around the cycle) of the hub-free construction."""
    k, m = wheel_budget(n)
    pos = [1]
    for j in range(2, m + 1):
        if j <= 3:
            pos.append(pos[-1] + 2 * (k - 3) + 1)
        else:
            pos.append(pos[-1] + (k - j + 1) + (k - j) + 1)
    return pos


def wheel_sequence(n: int) -> list[int]:
    if n == 4:
        # hub first, then burn the 4-cycle with threshold 1 in two rounds
        return [4, 0, 2]
    return [(p - 1) % n for p in wheel_positions(n)]


def _wheel(n: int) -> FamilyAnswer:
    if n == 3:
        return _complete(4)
    hub_case = 1 + ceil_sqrt(n)
    k, m = wheel_budget(n)
    b = min(hub_case, k)
    seq = BurnSequence(tuple(wheel_sequence(n)))
    if n == 4:
        return FamilyAnswer(Range.exact(3), Range(2, 3), seq,
                            {"b2": "wheel closed form (W_4)", "t2": "no closed form"})
    return FamilyAnswer(Range.exact(b), Range.exact(m), seq,
                        {"b2": "wheel closed form", "t2": "wheel source-count rule"})


def wheel_gap_instance(r: int) -> FamilySpec:
    """A wheel whose b_2 - t_2 is at least ``r``."""
    if r < 1:
        raise ValueError("gap target must be >= 1")
    k = 5
    while 2 * (k - 1) <= r * r:
        k += 1
    return wheel((k - 1) ** 2 - 5)


# ---------------------------------------------------------------------------
# corona, join

def corona_sequence(inner: Graph) -> list[int]:
    n = inner.n
    order = inner.bfs_order(0)
    return [order[0]] + [n + v for v in order[1:]] + [n + order[0]]


def _corona(inner_spec: FamilySpec) -> FamilyAnswer:
    return corona_answer(generate(inner_spec))


def corona_answer(inner: Graph) -> FamilyAnswer:
    """Closed form for the corona of an arbitrary connected base graph."""
    if not inner.is_connected():
        raise HypothesisError("corona base graph must be connected")
    v = inner.n + 1
    return FamilyAnswer(Range.exact(v), Range.exact(v), BurnSequence(tuple(corona_sequence(inner))),
                        {"b2": "corona closed form", "t2": "corona closed form"})


def _no_closed_form(n: int, why: str) -> FamilyAnswer:
    return FamilyAnswer(Range(1, n + 1), Range(1, n + 1), None,
                        {"b2": why, "t2": why}, closed=False)


def _join(a: FamilySpec, b: FamilySpec) -> FamilyAnswer:
    na, nb = a.order, b.order
    if na < 2 or nb < 2:
        return _no_closed_form(na + nb, "no closed form (join side with one vertex)")
    return FamilyAnswer(Range(2, 4), Range(2, 3), BurnSequence((0, 1, na)),
                        {"b2": "join upper bound", "t2": "join upper bound"})


# ---------------------------------------------------------------------------
# cartesian products

def _km_kn_hypothesis(m: int, n: int) -> bool:
    m, n = max(m, n), min(m, n)
    return (m >= 5 and n == 3) or (m >= n >= 4)


def _cart(a: FamilySpec, b: FamilySpec) -> FamilyAnswer:
    if a.kind == "complete" and b.kind == "complete" and _km_kn_hypothesis(a.order, b.order):
        nb = b.order
        return FamilyAnswer(Range.exact(5), Range.exact(2), BurnSequence((0, nb + 1)),
                            {"b2": "K_m x K_n closed form", "t2": "K_m x K_n closed form"})
    if a == b and a.kind == "cycle" and a.params == (4,):
        return FamilyAnswer(Range.exact(5), Range.exact(4), BurnSequence((0, 5, 10, 15)),
                            {"b2": "C_4 x C_4 closed form", "t2": "C_4 x C_4 closed form"})
    return product_bounds(a, b)


def factor_values(x: FamilySpec | Graph) -> tuple[int, int, list[int]]:
    """``(b2, t2, optimal witness of length t2)`` for a product factor."""
    g = x if isinstance(x, Graph) else generate(x)
    if isinstance(x, FamilySpec):
        try:
            ans = closed_form(x)
        except HypothesisError:
            ans = None
        if (ans is not None and ans.b2.is_exact and ans.t2.is_exact and ans.witness is not None
                and len(ans.witness) == ans.t2.value
                and simulate(g, ans.witness).rd == ans.b2.value):
            return ans.b2.value, ans.t2.value, list(ans.witness.sources)
    from .solver import solve
    from .graph import SizeLimitError

    try:
        b, t = solve(g, 2)
    except SizeLimitError as exc:
        raise FactorValuesUnknown(str(exc)) from exc
    if b.value is None or t.value is None:
        raise FactorValuesUnknown("solver could not settle the factor")
    return b.value, t.value, list(t.witness.sources)


def interleaved_sequence(g_seq, h_seq, h_order: int) -> list[int]:
    """Row-by-row product of two optimal factor sequences."""
    return [u * h_order + v for u in g_seq for v in h_seq]


def product_bounds(a: FamilySpec | Graph, b: FamilySpec | Graph) -> FamilyAnswer:
    """Interval for b_2 and t_2 of ``a [] b`` from the factor values."""
    ga = a if isinstance(a, Graph) else generate(a)
    gb = b if isinstance(b, Graph) else generate(b)
    bG, tG, wG = factor_values(a)
    bH, tH, wH = factor_values(b)
    upper_b = tG * tH + (bH - tH) + (bG - tG)
    if _km_kn_hypothesis(ga.n, gb.n):
        lower_b = max(5, bG, bH)
        why = "product lower bound (size hypothesis holds)"
    else:
        lower_b = max(bG, bH, 1)
        why = "factor lower bound (size hypothesis fails)"
    lower_t = 2 if ga.n * gb.n >= 2 else 1
    seq = BurnSequence(tuple(interleaved_sequence(wG, wH, gb.n)))
    return FamilyAnswer(Range(lower_b, upper_b), Range(lower_t, tG * tH), seq,
                        {"b2": f"{why}; interleaved upper bound",
                         "t2": "two-source minimum; interleaved upper bound"})


# ---------------------------------------------------------------------------

def closed_form(spec: FamilySpec) -> FamilyAnswer:
    k, p = spec.kind, spec.params
    if k == "path":
        return _path(p[0])
    if k == "cycle":
        return _cycle(p[0])
    if k == "complete":
        return _complete(p[0])
    if k == "kbip":
        return _kbip(*p)
    if k == "spider":
        return _spider(p)
    if k == "wheel":
        return _wheel(p[0])
    if k == "corona":
        return _corona(spec.parts[0])
    if k == "join":
        return _join(*spec.parts)
    if k == "cart":
        return _cart(*spec.parts)
    return _no_closed_form(generate(spec).n, "no closed form (graph from file)")


def construct_sequence(spec: FamilySpec) -> BurnSequence:
    """The witness sequence built in the proof for this family."""
    if spec.kind == "file":
        raise HypothesisError("no construction for an arbitrary graph file")
    if spec.kind == "join" and min(spec.parts[0].order, spec.parts[1].order) < 2:
        raise HypothesisError("join construction needs both sides with >= 2 vertices")
    ans = closed_form(spec)
    if ans.witness is None:
        raise HypothesisError(f"no construction available for {spec}")
    return ans.witness


__all__ = [
    "Range", "FamilyAnswer", "HypothesisError", "FactorValuesUnknown", "closed_form",
    "construct_sequence", "product_bounds", "wheel_gap_instance", "wheel_budget",
    "spider_values", "spider_sequence", "wheel_sequence", "corona_sequence", "corona_answer",
]
