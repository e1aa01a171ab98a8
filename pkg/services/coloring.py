# services/coloring.py
# Proper-path checking, constructive colorings, and the exact pc solver.
#
# Path semantics: a proper walk does not imply a proper path (a pendant edge
# into a vertex that owns a recolouring triangle already breaks it on five
# vertices), so reachability is decided over simple paths. The state search
# keys on (visited set, vertex, last colour); the cheaper walk search over
# (vertex, last colour) is only used to reject early, since every proper
# path is also a proper walk.
#
# Colour 0 inside the solver means "not yet coloured".

import logging
from dataclasses import dataclass
from typing import Optional

from config import settings
from graphs.edge_coloring import EdgeColoring
from graphs.graph import Graph
from services.errors import ConnectivityError, ContractError, UnsupportedSizeError
from services.structure import (
    build_bridge_tree,
    dirac_ore_flags,
    bridge_degree,
    find_bridges,
    hamiltonian_path,
    is_hamiltonian_path,
    spanning_tree,
    tree_max_degree,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PcResult:
    pc:          int
    witness:     EdgeColoring
    method:      str     # complete | tree | traceable | spanning-tree | search
    lower_bound: int
    upper_bound: int


def _check_inputs(g: Graph, c: EdgeColoring, operation: str) -> None:
    if not g.is_connected():
        raise ConnectivityError(operation)
    c.validate(g)


# ─── REACHABILITY ─────────────────────────────────────────────────────────────

def _walk_reach(inc: list, colors: list, width: int, source: int, wildcard: bool) -> int:
    """
    Vertices reachable from source by a proper walk. Uncoloured edges are
    skipped, or treated as compatible with everything when wildcard is set.
    """
    seen = {source * width}
    queue = [(source, 0)]
    reached = 1 << source
    for x, a in queue:
        for y, e in inc[x]:
            b = colors[e]
            if b == 0:
                if not wildcard:
                    continue
            elif b == a:
                continue
            state = y * width + b
            if state not in seen:
                seen.add(state)
                queue.append((y, b))
                reached |= 1 << y
    return reached


def _path_reach(inc: list, colors: list, source: int, targets: int) -> int:
    """Vertices reachable from source by a proper simple path; stops once targets are all hit"""
    reached = 1 << source
    seen = set()
    stack = [(1 << source, source, 0)]
    while stack:
        mask, x, a = stack.pop()
        for y, e in inc[x]:
            b = colors[e]
            if b == 0 or b == a or mask >> y & 1:
                continue
            grown = mask | 1 << y
            key = (grown, y, b)
            if key in seen:
                continue
            seen.add(key)
            reached |= 1 << y
            if reached & targets == targets:
                return reached
            stack.append((grown, y, b))
    return reached


def _walks_cover(inc: list, colors: list, n: int, width: int, wildcard: bool) -> bool:
    full = (1 << n) - 1
    return all(_walk_reach(inc, colors, width, u, wildcard) == full for u in range(n))


def _first_unreachable(inc: list, colors: list, n: int, width: int) -> Optional[tuple]:
    full = (1 << n) - 1
    if not _walks_cover(inc, colors, n, width, wildcard=False):
        for u in range(n):
            missing = full & ~_walk_reach(inc, colors, width, u, wildcard=False)
            if missing:
                v = (missing & -missing).bit_length() - 1
                return (u, v) if u < v else (v, u)
    for u in range(n - 1):
        # reachability is symmetric, so each source only has to cover the vertices above it
        targets = full & ~((1 << (u + 1)) - 1)
        missing = targets & ~_path_reach(inc, colors, u, targets)
        if missing:
            return u, (missing & -missing).bit_length() - 1
    return None


def unreachable_pair(g: Graph, c: EdgeColoring) -> Optional[tuple]:
    """A pair (u, v) with no proper path, or None when every pair is joined"""
    _check_inputs(g, c, "unreachable_pair")
    return _first_unreachable(g.incidence(), list(c.colors), g.n, c.k + 1)


def is_properly_connected(g: Graph, c: EdgeColoring) -> bool:
    return unreachable_pair(g, c) is None


def is_proper_path(g: Graph, c: EdgeColoring, path: list) -> bool:
    if len(set(path)) != len(path):
        return False
    if not all(g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    hues = [c.color_of(g, a, b) for a, b in zip(path, path[1:])]
    return all(x != y for x, y in zip(hues, hues[1:]))


def proper_path_witness(g: Graph, c: EdgeColoring, u: int, v: int) -> Optional[list]:
    _check_inputs(g, c, "proper_path_witness")
    if u == v:
        raise ContractError("proper_path_witness needs two distinct vertices")
    inc = g.incidence()
    colors = c.colors
    dead = set()
    path = [u]

    def extend(x: int, last: int, mask: int) -> bool:
        if x == v:
            return True
        key = (mask, x, last)
        if key in dead:
            return False
        for y, e in inc[x]:
            b = colors[e]
            if b != last and not mask >> y & 1:
                path.append(y)
                if extend(y, b, mask | 1 << y):
                    return True
                path.pop()
        dead.add(key)
        return False

    if not extend(u, 0, 1 << u):
        return None
    assert is_proper_path(g, c, path), "witness path is not proper"
    return path


# ─── CONSTRUCTIVE COLORINGS ───────────────────────────────────────────────────

def color_tree(g: Graph) -> EdgeColoring:
    """Proper edge coloring of a tree with exactly Delta colors (every path is then proper)"""
    if not g.is_tree():
        raise ContractError("color_tree needs a tree")
    if g.n == 1:
        return EdgeColoring(1, ())
    max_degree = max(g.degrees())
    inc = g.incidence()
    colors = [0] * g.m
    parent_color = {0: 0}
    queue = [0]
    for v in queue:
        palette = [c for c in range(1, max_degree + 1) if c != parent_color[v]]
        children = [(w, e) for w, e in inc[v] if w not in parent_color]
        for (w, e), color in zip(children, palette):
            colors[e] = color
            parent_color[w] = color
            queue.append(w)
    return EdgeColoring(max_degree, tuple(colors))


def color_traceable(g: Graph, hp: list) -> EdgeColoring:
    """Alternate 1,2 along a Hamiltonian path; every other edge gets 1"""
    if not is_hamiltonian_path(g, hp):
        raise ContractError("color_traceable needs a Hamiltonian path of the graph")
    colors = [1] * g.m
    for i, (a, b) in enumerate(zip(hp, hp[1:])):
        colors[g.edge_index(a, b)] = 1 if i % 2 == 0 else 2
    return EdgeColoring(2 if g.n >= 3 else 1, tuple(colors))


def _spanning_tree_coloring(g: Graph, tree: list, k: int) -> EdgeColoring:
    """Color a spanning tree properly and give every chord color 1"""
    subtree = Graph.from_edges(g.n, (g.edges[e] for e in tree))
    tree_colors = color_tree(subtree)
    colors = [1] * g.m
    for (u, v), color in zip(subtree.edges, tree_colors.colors):
        colors[g.edge_index(u, v)] = color
    return EdgeColoring(k, tuple(colors))


# ─── EXHAUSTIVE SEARCH ────────────────────────────────────────────────────────

def _search(g: Graph, k: int, bridges: frozenset) -> Optional[tuple]:
    """
    Depth-first over colorings in spanning-tree-first edge order.
    Symmetry: edge i may only open color max_used+1, so the first edge is pinned to 1.
    Accept as soon as the coloured spanning subgraph is properly connected.
    Prune when two bridges at a vertex share a color, or when some pair is
    unreachable even with uncoloured edges as wildcards.
    """
    n, m = g.n, g.m
    tree = spanning_tree(g)
    tree_set = set(tree)
    order = tree + [e for e in range(m) if e not in tree_set]
    inc = g.incidence()
    width = k + 1
    colors = [0] * m
    conflicts = {
        e: [f for f in bridges if f != e and set(g.edges[e]) & set(g.edges[f])]
        for e in bridges
    }
    visited = [0]

    def descend(pos: int, top: int) -> bool:
        visited[0] += 1
        if not _walks_cover(inc, colors, n, width, wildcard=True):
            return False
        if pos >= n - 1 and _first_unreachable(inc, colors, n, width) is None:
            return True
        if pos == m:
            return False
        e = order[pos]
        for color in range(1, min(k, top + 1) + 1):
            if any(colors[f] == color for f in conflicts.get(e, ())):
                continue
            colors[e] = color
            if descend(pos + 1, max(top, color)):
                return True
        colors[e] = 0
        return False

    found = descend(0, 0)
    logger.debug("[SEARCH] n=%d m=%d k=%d nodes=%d found=%s", n, m, k, visited[0], found)
    if not found:
        return None
    return tuple(color or 1 for color in colors)


# ─── DECISION + EXACT VALUE ───────────────────────────────────────────────────

def _structural_tiers(g: Graph, k: int, bridges: frozenset) -> Optional[tuple]:
    """Every tier short of exhaustive search; None when none of them settles k"""
    if g.is_complete():
        return EdgeColoring(k, (1,) * g.m), "complete"
    if k == 1:
        return None, "complete"

    if g.is_tree():
        if k >= max(g.degrees()):
            tree_coloring = color_tree(g)
            return EdgeColoring(k, tree_coloring.colors), "tree"
        return None, "tree"
    if bridge_degree(g, bridges) > k:
        return None, "bridge-degree"

    if g.n <= settings.hamiltonian_max_n:
        hp = hamiltonian_path(g)
        if hp is not None:
            return color_traceable(g, hp), "traceable"

    tree = spanning_tree(g)
    if tree_max_degree(g, tree) <= k:
        return _spanning_tree_coloring(g, tree, k), "spanning-tree"
    return None


def decide_with_method(g: Graph, k: int) -> tuple:
    """Return (coloring or None, method tag)"""
    if not g.is_connected():
        raise ConnectivityError("decide_pc_le_k")
    if k < 1:
        raise ContractError(f"color budget must be at least 1, got {k}")

    bridges = find_bridges(g)
    settled = _structural_tiers(g, k, bridges)
    if settled is not None:
        return settled

    if g.m > settings.search_max_edges:
        raise UnsupportedSizeError("decide_pc_le_k search", g.m, settings.search_max_edges)
    colors = _search(g, k, bridges)
    if colors is None:
        return None, "search"
    return EdgeColoring(k, colors), "search"


def decide_pc_le_k(g: Graph, k: int) -> Optional[EdgeColoring]:
    """A properly connecting coloring with at most k colors, or None if none exists"""
    coloring, _ = decide_with_method(g, k)
    return coloring


def bridge_lower_bound(g: Graph) -> int:
    """Bridges at one vertex need pairwise distinct colors; noncomplete graphs need two"""
    if not g.is_connected():
        raise ConnectivityError("bridge_lower_bound")
    if g.is_complete():
        return 1
    return max(2, bridge_degree(g))


def pc_bounds(g: Graph) -> tuple:
    """(lower, upper): bridge degree below; min(max{3, Delta(G*)}, Delta(T)) above"""
    lower = bridge_lower_bound(g)
    if lower == 1:
        return 1, 1
    upper = min(max(3, build_bridge_tree(g).max_degree), tree_max_degree(g, spanning_tree(g)))
    return lower, max(lower, upper)


def pc_exact(g: Graph) -> PcResult:
    lower, upper = pc_bounds(g)
    k = lower
    while True:
        coloring, method = decide_with_method(g, k)
        if coloring is not None:
            if k > upper:
                logger.warning("[PC] pc=%d exceeds the structural upper bound %d", k, upper)
            return PcResult(pc=k, witness=coloring, method=method, lower_bound=lower, upper_bound=upper)
        k += 1


# ─── VERTEX-DELETION SHORTCUT ─────────────────────────────────────────────────

def dirac_traceable(g: Graph) -> bool:
    """2*delta >= n-1 forces a Hamiltonian path, hence pc <= 2, at any order"""
    return g.n >= 1 and dirac_ore_flags(g).dirac_path


def _at_most_two(g: Graph) -> bool:
    """Structural tiers and Dirac only; exhaustive search is never entered here"""
    settled = _structural_tiers(g, 2, find_bridges(g))
    if settled is not None:
        return settled[0] is not None
    return dirac_traceable(g)


def deletion_certificate(g: Graph) -> Optional[int]:
    """
    A vertex v with d(v) >= 2, g - v connected and pc(g - v) <= 2, which
    certifies pc(g) <= 2 without producing a coloring. None if no vertex works.
    One level deep: each g - v is settled without search or further deletion,
    so the cost is at most n structural decisions.
    """
    if not g.is_connected():
        raise ConnectivityError("deletion_certificate")
    for v in sorted(range(g.n), key=lambda x: (-g.degree(x), x)):
        if g.degree(v) < 2:
            break
        rest = g.remove_vertex(v)
        if rest.n and rest.is_connected() and _at_most_two(rest):
            return v
    return None
