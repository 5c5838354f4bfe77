"""Simple undirected graphs stored as per-vertex neighbour bitsets.

Vertices are ``0..n-1``. ``adj[v]`` is a Python int whose bit ``u`` is set
iff ``uv`` is an edge. Graphs are never mutated after construction; every
operator below returns a fresh graph.

Canonical numbering of the builders (witness sequences rely on it):

* path / cycle: consecutive, ``i ~ i+1`` (and ``n-1 ~ 0`` for cycles)
* complete bipartite ``K_{m,n}``: side A is ``0..m-1``, side B is ``m..m+n-1``
* spider: hub is 0, legs follow leg by leg, each leg numbered outward
  from the hub (first vertex of a leg touches the hub, last one is a leaf)
* wheel ``W_n``: rim ``0..n-1`` consecutive, hub is ``n``
* corona ``G o K1``: vertices of G keep their ids, the leaf of ``i`` is ``n+i``
* join ``G v H``: G keeps its ids, H is shifted by ``|V(G)|``
* cartesian ``G [] H``: ``(u, v)`` maps to ``u * |V(H)| + v``
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or parameters."""


class ParseError(GraphError):
    """Malformed edge-list or family-spec text."""


class SizeLimitError(RuntimeError):
    """An exact routine refused an instance above its advertised size limit."""


class DisconnectedGraphError(GraphError):
    """The operation is only defined for connected graphs."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "labels", "_hash")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if (a >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(a):
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric on edge {v}-{u}")
        if labels is not None and len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full

    def require_connected(self) -> None:
        if self.n == 0 or not self.is_connected():
            raise DisconnectedGraphError("graph must be connected and non-empty")

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        labels = [self.label(v) for v in keep] if self.labels is not None else None
        return Graph.from_edges(len(keep), edges, labels)

    def spanning_subgraph(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"({u},{v}) is not an edge of this graph")
        return Graph.from_edges(self.n, edges, self.labels)

    def bfs_order(self, root: int = 0) -> list[int]:
        order = [root]
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(self.adj[v]):
                if u not in seen:
                    seen.add(u)
                    order.append(u)
                    queue.append(u)
        return order

    def ball_sizes(self, radius: int) -> list[int]:
        """``out[d]`` = largest closed ball of radius ``d`` around any vertex."""
        best = [0] * (radius + 1)
        for v in range(self.n):
            ball = 1 << v
            best[0] = max(best[0], 1)
            for d in range(1, radius + 1):
                grown = ball
                for u in bits(ball):
                    grown |= self.adj[u]
                ball = grown
                best[d] = max(best[d], ball.bit_count())
        return best

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# builders

def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m >= 1 and n >= 1")
    edges = [(a, m + b) for a in range(m) for b in range(n)]
    labels = [f"a{a}" for a in range(m)] + [f"b{b}" for b in range(n)]
    return Graph.from_edges(m + n, edges, labels)


def spider_graph(legs: Sequence[int]) -> Graph:
    if len(legs) < 3:
        raise GraphError("spider needs at least 3 legs")
    if any(length < 1 for length in legs):
        raise GraphError("spider legs must have length >= 1")
    edges = []
    labels = ["hub"]
    nxt = 1
    for i, length in enumerate(legs):
        prev = 0
        for j in range(length):
            edges.append((prev, nxt))
            labels.append(f"L{i + 1}.{j + 1}")
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges, labels)


def spider_legs(legs: Sequence[int]) -> list[list[int]]:
    """Vertex ids of each spider leg, listed outward from the hub."""
    out = []
    start = 1
    for length in legs:
        out.append(list(range(start, start + length)))
        start += length
    return out


def wheel_graph(n: int) -> Graph:
    """``W_n``: the cycle ``C_n`` on ``0..n-1`` plus hub ``n``."""
    if n < 3:
        raise GraphError("wheel needs n >= 3 rim vertices")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    labels = [str(i + 1) for i in range(n)] + ["hub"]
    return Graph.from_edges(n + 1, edges, labels)


def corona(g: Graph) -> Graph:
    n = g.n
    edges = g.edges() + [(i, n + i) for i in range(n)]
    labels = [g.label(i) for i in range(n)] + [g.label(i) + "'" for i in range(n)]
    return Graph.from_edges(2 * n, edges, labels)


def join(g: Graph, h: Graph) -> Graph:
    off = g.n
    edges = g.edges() + [(u + off, v + off) for u, v in h.edges()]
    edges += [(u, off + v) for u in range(g.n) for v in range(h.n)]
    labels = [f"G:{g.label(v)}" for v in range(g.n)] + [f"H:{h.label(v)}" for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges, labels)


def cartesian(g: Graph, h: Graph) -> Graph:
    m, n = g.n, h.n
    edges = []
    for u in range(m):
        for a, b in h.edges():
            edges.append((u * n + a, u * n + b))
    for a, b in g.edges():
        for v in range(n):
            edges.append((a * n + v, b * n + v))
    labels = [f"({g.label(u)},{h.label(v)})" for u in range(m) for v in range(n)]
    return Graph.from_edges(m * n, edges, labels)


def product_index(u: int, v: int, h_order: int) -> int:
    return u * h_order + v


# ---------------------------------------------------------------------------
# edge-list text format

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment line."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))
    if not lines:
        raise ParseError("empty edge list: missing 'n m' header")
    lineno, header = lines[0]
    try:
        n, m = (int(tok) for tok in header.split())
    except ValueError:
        raise ParseError(f"line {lineno}: header must be 'n m', got {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative count in header")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)} edge lines")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# small exact helpers

DOMINATING_SET_LIMIT = 24


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    covered = 0
    for v in vertices:
        covered |= g.adj[v] | (1 << v)
    return covered == g.full


def _can_dominate(closed: Sequence[int], covered: int, full: int, budget: int, allowed: int) -> bool:
    if covered == full:
        return True
    if budget == 0:
        return False
    low = ~covered & full
    u = (low & -low).bit_length() - 1
    # u must be covered by a vertex of its closed neighbourhood
    for w in bits(closed[u] & allowed):
        if _can_dominate(closed, covered | closed[w], full, budget - 1, allowed):
            return True
    return False


def min_dominating_set(g: Graph, limit: int = DOMINATING_SET_LIMIT) -> list[int]:
    """Lexicographically smallest dominating set of minimum size.

    Exhaustive: branch on the lowest undominated vertex, whose closed
    neighbourhood must contain a chosen vertex. Refuses graphs above
    ``limit`` vertices instead of falling back to a heuristic.
    """
    g.require_connected()
    if g.n > limit:
        raise SizeLimitError(f"min_dominating_set is exact only up to {limit} vertices (got {g.n})")
    closed = [a | (1 << v) for v, a in enumerate(g.adj)]
    full = g.full
    size = 1
    while not _can_dominate(closed, 0, full, size, full):
        size += 1
    # fix the smallest feasible vertex one position at a time
    chosen: list[int] = []
    covered = 0
    for slot in range(size):
        start = chosen[-1] + 1 if chosen else 0
        for v in range(start, g.n):
            allowed = full & ~((1 << (v + 1)) - 1)
            if _can_dominate(closed, covered | closed[v], full, size - slot - 1, allowed):
                chosen.append(v)
                covered |= closed[v]
                break
    return chosen


def degree2_chains(g: Graph) -> list[tuple[list[int], bool]]:
    """Components of the subgraph induced by degree-2 vertices.

    Each entry is ``(vertices in walk order, is_cycle)``.
    """
    deg2 = mask_of(v for v in range(g.n) if g.degree(v) == 2)
    chains = []
    seen = 0
    for v in bits(deg2):
        if (seen >> v) & 1:
            continue
        # walk to one end of the chain (or all the way round a cycle)
        start, prev = v, -1
        while True:
            nxt = [u for u in bits(g.adj[start] & deg2) if u != prev]
            if not nxt or nxt[0] == v:
                break
            prev, start = start, nxt[0]
        order = [start]
        prev, cur = -1, start
        is_cycle = False
        while True:
            nxt = [u for u in bits(g.adj[cur] & deg2) if u != prev]
            if not nxt:
                break
            if nxt[0] == start:
                is_cycle = len(order) > 2
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        seen |= mask_of(order)
        chains.append((order, is_cycle))
    return chains


def structural_stats(g: Graph) -> dict[str, int]:
    """Leaf count and the minimum vertex cover of the induced degree-2 chains.

    Both are lower bounds on the number of sources any 2-burning sequence
    must contain (a leaf can never see two blue neighbours; of two adjacent
    degree-2 vertices at least one is a source).
    """
    leaves = sum(1 for a in g.adj if a.bit_count() == 1)
    cover = 0
    for order, is_cycle in degree2_chains(g):
        c = len(order)
        cover += (c + 1) // 2 if is_cycle else c // 2
    return {"leaves": leaves, "deg2_chain_cover": cover}
