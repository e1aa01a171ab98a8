# graphs/edge_coloring.py
from dataclasses import dataclass

from graphs.graph import Graph
from services.errors import ContractError


@dataclass(frozen=True)
class EdgeColoring:
    """
    Colors 1..k assigned to edge indices of one graph.
    colors[i] is the color of edge i of the target graph.
    """
    k:      int
    colors: tuple

    def color_of(self, g: Graph, u: int, v: int) -> int:
        return self.colors[g.edge_index(u, v)]

    def used(self) -> int:
        return len(set(self.colors))

    def validate(self, g: Graph) -> None:
        """Raise ContractError unless this coloring is total on g with colors in 1..k"""
        if len(self.colors) != g.m:
            raise ContractError(
                f"coloring covers {len(self.colors)} edges but the graph has {g.m}"
            )
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                u, v = g.edges[i]
                raise ContractError(f"edge ({u}, {v}) has color {c} outside 1..{self.k}")

    def as_triples(self, g: Graph) -> list:
        return [[u, v, c] for (u, v), c in zip(g.edges, self.colors)]
