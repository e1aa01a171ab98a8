# schemas/cli.py
# JSON shapes printed by the subcommands; human output renders the same records.
from typing import List, Optional

from pydantic import BaseModel

from schemas.bounds import BoundQuery, BoundResult


class PcOutput(BaseModel):
    graph6:      str
    n:           int
    m:           int
    pc:          int
    method:      str
    lower_bound: int
    upper_bound: int
    coloring:    List[List[int]]       # [u, v, color] per edge


class CheckOutput(BaseModel):
    properly_connected: bool
    unreachable_pair:   Optional[List[int]] = None
    colors_used:        int


class GstarOutput(BaseModel):
    graph6:        str
    bridges:       List[List[int]]
    components:    List[List[int]]
    singletons:    List[int]           # node ids of single-vertex components
    tree_edges:    List[List[int]]     # [node a, node b] per bridge
    delta_star:    int
    bridge_degree: int


class BoundsOutput(BaseModel):
    query:  BoundQuery
    result: BoundResult


class GenOutput(BaseModel):
    family: str
    graph6: Optional[str]      # None above the graph6 short-form limit
    n:      int
    m:      int
