# services/structure.py
# Bridges, 2-edge-connected components, the bridge tree G*, Hamiltonian paths,
# and exact longest path / longest cycle by subset dynamic programming.

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

from config import settings
from graphs.graph import Graph
from services.bounds import ore_min_edges
from services.errors import ConnectivityError, UnsupportedSizeError

logger = logging.getLogger(__name__)


def _require_connected(g: Graph, operation: str) -> None:
    if not g.is_connected():
        raise ConnectivityError(operation)


# ─── BRIDGES ──────────────────────────────────────────────────────────────────

def find_bridges(g: Graph) -> frozenset:
    """Edge indices whose removal disconnects g (DFS low-link, iterative)"""
    _require_connected(g, "find_bridges")
    if g.n == 0:
        return frozenset()
    inc = g.incidence()
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = set()

    disc[0] = low[0] = 0
    timer = 1
    stack = [(0, -1, iter(inc[0]))]
    while stack:
        v, parent_edge, neighbors = stack[-1]
        advanced = False
        for w, e in neighbors:
            if e == parent_edge:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, e, iter(inc[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.add(parent_edge)
    return frozenset(bridges)


def bridge_degree(g: Graph, bridges: frozenset = None) -> int:
    """Largest number of bridges meeting at one vertex"""
    if bridges is None:
        bridges = find_bridges(g)
    counts = [0] * g.n
    for e in bridges:
        u, v = g.edges[e]
        counts[u] += 1
        counts[v] += 1
    return max(counts, default=0)


def two_edge_connected_components(g: Graph) -> list:
    """Vertex partition of g minus its bridges, parts sorted, ordered by smallest vertex"""
    bridges = find_bridges(g)
    kept = Graph.from_edges(g.n, (e for i, e in enumerate(g.edges) if i not in bridges))
    return [
        tuple(v for v in range(g.n) if mask >> v & 1)
        for mask in kept.component_masks()
    ]


# ─── BRIDGE TREE ──────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class BridgeTree:
    """
    G*: one node per 2-edge-connected component (singletons included),
    one tree edge per bridge. Node ids follow the smallest contained vertex.
    """
    nodes:      tuple   # tuple of vertex tuples
    node_of:    tuple   # node_of[v] = node id containing v
    tree_edges: tuple   # (bridge edge index, node a, node b), a < b
    max_degree: int

    @property
    def bridges(self) -> list:
        return [e for e, _, _ in self.tree_edges]

    def is_singleton(self, node: int) -> bool:
        return len(self.nodes[node]) == 1

    def singletons(self) -> list:
        return [i for i in range(len(self.nodes)) if self.is_singleton(i)]

    def blocks(self) -> list:
        return [i for i in range(len(self.nodes)) if not self.is_singleton(i)]

    def as_graph(self) -> Graph:
        return Graph.from_edges(len(self.nodes), ((a, b) for _, a, b in self.tree_edges))


def build_bridge_tree(g: Graph) -> BridgeTree:
    components = two_edge_connected_components(g)
    node_of = [0] * g.n
    for node, part in enumerate(components):
        for v in part:
            node_of[v] = node

    degree = [0] * len(components)
    tree_edges = []
    for e in sorted(find_bridges(g)):
        u, v = g.edges[e]
        a, b = sorted((node_of[u], node_of[v]))
        tree_edges.append((e, a, b))
        degree[a] += 1
        degree[b] += 1

    return BridgeTree(
        nodes=tuple(components),
        node_of=tuple(node_of),
        tree_edges=tuple(tree_edges),
        max_degree=max(degree, default=0),
    )


def spanning_tree(g: Graph) -> list:
    """Edge indices of the BFS tree from vertex 0, in discovery order"""
    _require_connected(g, "spanning_tree")
    if g.n == 0:
        return []
    inc = g.incidence()
    seen = 1
    queue = [0]
    tree = []
    for v in queue:
        for w, e in inc[v]:
            if not seen >> w & 1:
                seen |= 1 << w
                tree.append(e)
                queue.append(w)
    return tree


def tree_max_degree(g: Graph, tree: list) -> int:
    counts = [0] * g.n
    for e in tree:
        u, v = g.edges[e]
        counts[u] += 1
        counts[v] += 1
    return max(counts, default=0)


# ─── HAMILTONIAN PATHS ────────────────────────────────────────────────────────

def _path_end_table(g: Graph) -> list:
    """ends[mask] = bitmask of vertices v such that some path covers exactly mask and ends at v"""
    n = g.n
    adj = g.adjacency
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        current = ends[mask]
        while current:
            low = current & -current
            current ^= low
            v = low.bit_length() - 1
            reach = adj[v] & ~mask
            while reach:
                bit = reach & -reach
                reach ^= bit
                ends[mask | bit] |= bit
    return ends


def _walk_back(g: Graph, ends: list, mask: int, last: int) -> list:
    path = [last]
    while mask != 1 << last:
        mask ^= 1 << last
        options = ends[mask] & g.adjacency[last]
        last = (options & -options).bit_length() - 1
        path.append(last)
    path.reverse()
    return path


def is_hamiltonian_path(g: Graph, path: list) -> bool:
    return (
        len(path) == g.n
        and len(set(path)) == g.n
        and all(0 <= v < g.n for v in path)
        and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
    )


def _pieces_without(g: Graph, v: int) -> int:
    """Number of connected components of g - v"""
    remaining = ((1 << g.n) - 1) & ~(1 << v)
    pieces = 0
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = g.adjacency[low.bit_length() - 1] & remaining & ~comp
            comp |= fresh
            frontier |= fresh
        remaining &= ~comp
        pieces += 1
    return pieces


def _cannot_be_traced(g: Graph) -> bool:
    """A Hamiltonian path has two ends and splits into at most two pieces around any vertex"""
    if sum(1 for d in g.degrees() if d == 1) > 2:
        return True
    return any(_pieces_without(g, v) > 2 for v in range(g.n))


def hamiltonian_path(g: Graph) -> Optional[list]:
    if g.n > settings.hamiltonian_max_n:
        raise UnsupportedSizeError("hamiltonian_path", g.n, settings.hamiltonian_max_n)
    if g.n == 0:
        return []
    if not g.is_connected() or _cannot_be_traced(g):
        return None
    full = (1 << g.n) - 1
    ends = _path_end_table(g)
    if not ends[full]:
        return None
    last = (ends[full] & -ends[full]).bit_length() - 1
    path = _walk_back(g, ends, full, last)
    assert is_hamiltonian_path(g, path), "hamiltonian path reconstruction failed"
    return path


# ─── LONGEST PATH / CYCLE ─────────────────────────────────────────────────────

@dataclass(frozen=True)
class PathCycleProfile:
    p:                 int    # detour number: order of a longest path
    c:                 int    # circumference: order of a longest cycle, 0 for forests
    hamiltonian_path:  bool
    hamiltonian_cycle: bool


def _longest_cycle(g: Graph) -> int:
    """Cycles are rooted at their lowest vertex s; paths from s only extend to vertices above s"""
    n = g.n
    adj = g.adjacency
    best = 0
    for s in range(n):
        above = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        ends = {1 << s: 1 << s}
        frontier = [1 << s]
        while frontier:
            next_frontier = []
            for mask in frontier:
                current = ends[mask]
                size = bin(mask).count("1")
                if size >= 3 and current & adj[s] and size > best:
                    best = size
                while current:
                    low = current & -current
                    current ^= low
                    reach = adj[low.bit_length() - 1] & above & ~mask
                    while reach:
                        bit = reach & -reach
                        reach ^= bit
                        grown = mask | bit
                        if grown not in ends:
                            ends[grown] = 0
                            next_frontier.append(grown)
                        ends[grown] |= bit
            frontier = next_frontier
    return best


def path_cycle_profile(g: Graph) -> PathCycleProfile:
    if g.n > settings.profile_max_n:
        raise UnsupportedSizeError("path_cycle_profile", g.n, settings.profile_max_n)
    if g.n == 0:
        return PathCycleProfile(p=0, c=0, hamiltonian_path=True, hamiltonian_cycle=False)
    ends = _path_end_table(g)
    p = max(bin(mask).count("1") for mask in range(1, 1 << g.n) if ends[mask])
    c = _longest_cycle(g)
    return PathCycleProfile(p=p, c=c, hamiltonian_path=p == g.n, hamiltonian_cycle=c == g.n)


# ─── DEGREE CONDITIONS ────────────────────────────────────────────────────────

class HamiltonFlags(NamedTuple):
    dirac_path:       bool   # delta >= (n-1)/2
    dirac_cycle:      bool   # delta >= n/2, n >= 3
    dirac_hc:         bool   # delta >= (n+1)/2, n >= 3
    ore_cycle:        bool   # d(u)+d(v) >= n for all nonadjacent pairs, n >= 3
    size_hamiltonian: bool   # |E| >= C(n-1,2)+2


def dirac_ore_flags(g: Graph) -> HamiltonFlags:
    n = g.n
    degrees = g.degrees()
    delta = min(degrees, default=0)
    ore = n >= 3 and all(
        degrees[u] + degrees[v] >= n
        for u in range(n) for v in range(u + 1, n)
        if not g.has_edge(u, v)
    )
    return HamiltonFlags(
        dirac_path=n >= 1 and 2 * delta >= n - 1,
        dirac_cycle=n >= 3 and 2 * delta >= n,
        dirac_hc=n >= 3 and 2 * delta >= n + 1,
        ore_cycle=ore,
        size_hamiltonian=n >= 3 and g.m >= ore_min_edges(n),
    )
