# tests/oracles.py
# Independent, deliberately naive reference implementations.
import itertools

import networkx as nx

from graphs.edge_coloring import EdgeColoring
from graphs.graph import Graph
from services.coloring import is_properly_connected


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def coloring_from(g: Graph, k: int, colors: dict) -> EdgeColoring:
    """Build a coloring from {(u, v): color}; keys may be in either orientation"""
    normalized = {(min(u, v), max(u, v)): c for (u, v), c in colors.items()}
    return EdgeColoring(k, tuple(normalized[e] for e in g.edges))


def naive_properly_connected(g: Graph, coloring: EdgeColoring) -> bool:
    h = to_nx(g)
    color = {e: c for e, c in zip(g.edges, coloring.colors)}

    def hue(a, b):
        return color[(min(a, b), max(a, b))]

    for u, v in itertools.combinations(range(g.n), 2):
        found = False
        for path in nx.all_simple_paths(h, u, v):
            hues = [hue(a, b) for a, b in zip(path, path[1:])]
            if all(x != y for x, y in zip(hues, hues[1:])):
                found = True
                break
        if not found:
            return False
    return True


def brute_force_pc(g: Graph) -> int:
    """Smallest k admitting a properly connecting coloring, trying every assignment"""
    k = 1
    while True:
        for colors in itertools.product(range(1, k + 1), repeat=g.m):
            if is_properly_connected(g, EdgeColoring(k, colors)):
                return k
        k += 1


def connected_classes_by_brute_force(n: int) -> int:
    """Count connected graphs on n vertices up to isomorphism via networkx"""
    pairs = list(itertools.combinations(range(n), 2))
    representatives = []
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if not nx.is_connected(h):
            continue
        if not any(
            r.number_of_edges() == h.number_of_edges() and nx.is_isomorphic(r, h)
            for r in representatives
        ):
            representatives.append(h)
    return len(representatives)


def random_tree(rng, n: int) -> Graph:
    return Graph.from_edges(n, ((v, rng.randrange(v)) for v in range(1, n)))


def random_connected(rng, n: int, p: float = 0.4) -> Graph:
    """A random tree plus each remaining pair with probability p, randomly relabelled"""
    edges = set(random_tree(rng, n).edges)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    order = list(range(n))
    rng.shuffle(order)
    return Graph.from_edges(n, edges).relabel(order)
