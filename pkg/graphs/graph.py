# graphs/graph.py
# Immutable simple undirected graph with stable edge indices.
#
# Vertices are 0..n-1. Edges are stored once as (u, v) with u < v, sorted
# lexicographically; an edge's index is its position in that list and never
# changes. Adjacency is kept as one bitmask per vertex so the subset DPs in
# services/structure.py can work on plain ints.

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from services.errors import ContractError


class GraphStats(NamedTuple):
    n:          int
    m:          int
    min_degree: int
    max_degree: int
    connected:  bool
    complete:   bool


@dataclass(frozen=True)
class Graph:
    n:         int
    edges:     tuple
    adjacency: tuple = field(repr=False)
    _index:    dict  = field(repr=False, compare=False, hash=False, default=None)

    # ─── CONSTRUCTION ─────────────────────────────────────────────────────────

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and out-of-range vertices"""
        if n < 0:
            raise ContractError(f"vertex count must be non-negative, got {n}")
        adjacency = [0] * n
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in normalized:
                raise ContractError(f"duplicate edge {pair}")
            normalized.add(pair)
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        ordered = tuple(sorted(normalized))
        index = {pair: i for i, pair in enumerate(ordered)}
        return cls(n, ordered, tuple(adjacency), index)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    def __post_init__(self):
        if self._index is None:
            object.__setattr__(self, "_index", {pair: i for i, pair in enumerate(self.edges)})

    # ─── QUERIES ──────────────────────────────────────────────────────────────

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u < v else (v, u))

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def degrees(self) -> list:
        return [self.degree(v) for v in range(self.n)]

    def neighbors(self, v: int) -> list:
        mask = self.adjacency[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def incidence(self) -> list:
        """incidence[v] = [(neighbor, edge_index), ...] in neighbor order"""
        inc = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        for row in inc:
            row.sort()
        return inc

    def component_masks(self) -> list:
        """Vertex bitmask of each connected component, ordered by smallest vertex"""
        seen = 0
        components = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                fresh = self.adjacency[low.bit_length() - 1] & ~comp
                comp |= fresh
                frontier |= fresh
            seen |= comp
            components.append(comp)
        return components

    def is_connected(self) -> bool:
        # the empty graph on zero vertices is treated as connected
        return self.n == 0 or len(self.component_masks()) == 1

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def complement_size(self) -> int:
        return self.n * (self.n - 1) // 2 - self.m

    # ─── DERIVED GRAPHS ───────────────────────────────────────────────────────

    def remove_vertex(self, v: int) -> "Graph":
        """Delete v; vertices above v shift down by one"""
        def shift(x):
            return x - 1 if x > v else x

        return Graph.from_edges(
            self.n - 1,
            ((shift(a), shift(b)) for a, b in self.edges if v not in (a, b)),
        )

    def remove_edge(self, index: int) -> "Graph":
        return Graph.from_edges(self.n, (e for i, e in enumerate(self.edges) if i != index))

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges + ((u, v),))

    def relabel(self, order: list) -> "Graph":
        """order[i] = old label of the vertex that becomes label i"""
        new_label = {old: new for new, old in enumerate(order)}
        return Graph.from_edges(self.n, ((new_label[u], new_label[v]) for u, v in self.edges))


# ─── ALGEBRA ──────────────────────────────────────────────────────────────────

def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((u + g.n, v + g.n) for u, v in h.edges)
    return Graph.from_edges(g.n + h.n, list(g.edges) + list(shifted))


def join(g: Graph, h: Graph) -> Graph:
    union = disjoint_union(g, h)
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(union.n, list(union.edges) + cross)


def basic_stats(g: Graph) -> GraphStats:
    degrees = g.degrees()
    return GraphStats(
        n=g.n,
        m=g.m,
        min_degree=min(degrees, default=0),
        max_degree=max(degrees, default=0),
        connected=g.is_connected(),
        complete=g.is_complete(),
    )
