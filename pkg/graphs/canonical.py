# graphs/canonical.py
# Canonical form = graph6 bytes of a relabelling chosen by an isomorphism-
# invariant rule, so isomorphic graphs share bytes and others never do.
#
# Vertices are first split into cells by colour refinement (degree, then the
# multiset of neighbour cells, until stable). Admissible orderings place the
# lowest remaining cell first; among those the one with the lexicographically
# smallest upper-triangle bit string (graph6 column order) wins.
#
# The result is therefore NOT the minimum over all n! relabellings, and its
# bytes can differ from that minimum (or from nauty's canonical labelling).
# Equal bytes still mean isomorphic graphs, which is all the enumerator and
# exception matching rely on. Never compare these forms with ones produced
# by another tool.
#
# The smallest string is built one column at a time. Column j of a partial
# ordering pi_0..pi_{j-1} plus candidate v is the bit vector
# (adj(pi_0, v), ..., adj(pi_{j-1}, v)), so every surviving partial ordering
# must achieve the smallest possible column at every step. Two partial
# orderings that place the same vertex set and give every unplaced vertex
# the same bit vector have identical futures and are merged.

from config import settings
from graphs.graph import Graph
from graphs.io import emit_graph6
from services.errors import UnsupportedSizeError


def refine_cells(g: Graph) -> list:
    """Stable colour refinement; cell ids are ranks of invariant signatures"""
    neighbors = [g.neighbors(v) for v in range(g.n)]
    degrees = g.degrees()
    ranks = {d: i for i, d in enumerate(sorted(set(degrees)))}
    cells = [ranks[d] for d in degrees]
    while True:
        signatures = [
            (cells[v], tuple(sorted(cells[u] for u in neighbors[v])))
            for v in range(g.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [ranks[s] for s in signatures]
        if len(ranks) == len(set(cells)):
            return refined
        cells = refined


def canonical_order(g: Graph) -> list:
    """Return order with order[i] = old label of canonical vertex i"""
    n = g.n
    if n == 0:
        return []
    adj = g.adjacency
    cells = refine_cells(g)

    def admissible(placed: int) -> list:
        free = [v for v in range(n) if not placed >> v & 1]
        lowest = min(cells[v] for v in free)
        return [v for v in free if cells[v] == lowest]

    # state key: (placed mask, signature per vertex) -> one representative ordering
    states = {}
    for v in admissible(0):
        sigs = tuple(0 if u == v else adj[v] >> u & 1 for u in range(n))
        states.setdefault((1 << v, sigs), [v])

    for _ in range(1, n):
        best = None
        survivors = {}
        for (placed, sigs), order in states.items():
            for v in admissible(placed):
                column = sigs[v]
                if best is not None and column > best:
                    continue
                if best is None or column < best:
                    best = column
                    survivors = {}
                row = adj[v]
                new_placed = placed | 1 << v
                new_sigs = tuple(
                    0 if new_placed >> u & 1 else sigs[u] << 1 | row >> u & 1
                    for u in range(n)
                )
                survivors.setdefault((new_placed, new_sigs), order + [v])
        states = survivors

    return next(iter(states.values()))


def canonical_graph(g: Graph) -> Graph:
    if g.n > settings.canonical_max_n:
        raise UnsupportedSizeError("canonical_form", g.n, settings.canonical_max_n)
    return g.relabel(canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """Identical for isomorphic graphs, distinct otherwise"""
    return emit_graph6(canonical_graph(g)).encode("ascii")
