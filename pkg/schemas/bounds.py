# schemas/bounds.py
from typing import Literal, Optional

from pydantic import BaseModel, Field

BoundVariant = Literal[
    "g-nk", "bridge-bound-simple", "bridge-bound-lemma", "main-thm",
    "thm34", "conjecture", "erdos-gallai", "woodall",
]


class BoundQuery(BaseModel):
    variant: BoundVariant
    n:       int = Field(ge=1)
    k:       Optional[int] = None
    t:       Optional[int] = None
    delta:   Optional[int] = None
    c:       Optional[int] = None          # erdos-gallai circumference
    m_param: Optional[int] = None          # woodall block size
    reading: Literal["theorem", "abstract"] = "theorem"


class BoundResult(BaseModel):
    value:   int = Field(ge=0)
    m_used:  int
    formula: str


class WoodallSplit(BaseModel):
    t:         int
    r:         int
    threshold: int
