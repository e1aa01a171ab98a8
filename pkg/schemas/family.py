# schemas/family.py
from typing import Literal, Optional

from pydantic import BaseModel

FamilyTag = Literal[
    "complete", "path", "cycle", "star",
    "g-star-1", "g-star-2", "g-1", "g-n", "g-k",
    "expr",
]


class GraphFamily(BaseModel):
    """
    A named construction. n is the order for every tag that takes one
    (star with order n is K_{1,n-1}); g-k also needs k and delta; expr needs expr.
    Well-formedness is checked by graphs.families.build_family.
    """
    tag:   FamilyTag
    n:     Optional[int] = None
    k:     Optional[int] = None
    delta: Optional[int] = None
    expr:  Optional[str] = None
