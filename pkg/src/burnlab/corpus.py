"""Reproducible graph corpora for the verification suites."""

from __future__ import annotations

import random

from .graph import Graph

DEFAULT_SEED = 20240501


def atlas_connected(max_n: int, min_n: int = 1) -> list[tuple[str, Graph]]:
    """Every connected graph on ``min_n..max_n`` vertices, one per isomorphism class.

    Taken from the networkx graph atlas (all graphs up to 7 vertices); each
    graph is named ``atlas:G<i>`` after its atlas index.
    """
    if max_n > 7:
        raise ValueError("the graph atlas only goes up to 7 vertices")
    import networkx as nx

    out = []
    for i, h in enumerate(nx.graph_atlas_g()):
        n = h.number_of_nodes()
        if n < min_n or n > max_n or n == 0 or not nx.is_connected(h):
            continue
        out.append((f"atlas:G{i}", Graph.from_edges(n, h.edges())))
    return out


def small_connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for _, g in atlas_connected(max_n, min_n)]


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``."""
    if p is None:
        p = rng.uniform(0.1, 0.6)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_corpus(count: int, max_n: int, seed: int = DEFAULT_SEED, min_n: int = 2) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(min_n, max_n)) for _ in range(count)]


def random_spanning_pair(rng: random.Random, max_n: int, min_n: int = 2) -> tuple[Graph, Graph]:
    """``(G, H)`` with ``H`` a connected spanning subgraph of ``G``."""
    g = random_connected_graph(rng, rng.randint(min_n, max_n))
    tree = _spanning_tree(g, rng)
    extra = [e for e in g.edges() if e not in tree]
    keep = [e for e in extra if rng.random() < 0.5]
    return g, g.spanning_subgraph(sorted(tree) + keep)


def _spanning_tree(g: Graph, rng: random.Random) -> set[tuple[int, int]]:
    root = rng.randrange(g.n)
    seen = {root}
    frontier = [root]
    tree = set()
    while frontier:
        u = frontier.pop(rng.randrange(len(frontier)))
        nbrs = g.neighbors(u)
        rng.shuffle(nbrs)
        for v in nbrs:
            if v not in seen:
                seen.add(v)
                tree.add((min(u, v), max(u, v)))
                frontier.append(v)
    return tree
