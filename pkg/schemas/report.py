# schemas/report.py
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field

TheoremTag = Literal[
    "prop11", "thm2-bridgeless", "thm3-gstar", "thm-gnk", "lemma-bridge-bound",
    "thm-main-k3", "thm-small-order", "thm-k2-d2", "remark-quarter-degree",
    "woodall-eg-soundness", "conjecture-k2", "lemma-monotonicity",
]

# Tags whose statement lists exceptional graphs matched by canonical form
EXCEPTION_TAGS = ("thm-gnk", "thm-small-order", "thm-k2-d2")


class VerifyTask(BaseModel):
    theorem:      TheoremTag
    n:            int = Field(ge=1)
    source:       str = "builtin"          # "builtin", a graph6 file path, or "-" for stdin
    k:            Optional[int] = None     # thm-gnk (default 2), thm-main-k3 (default 3)
    reading:      Literal["theorem", "abstract"] = "theorem"
    min_degree:   Optional[int] = None
    min_size:     Optional[int] = None
    bridges:      Optional[int] = None     # exact bridge count filter
    widen_delta:  bool = False             # thm-k2-d2: delta >= 2 instead of delta == 2
    exact_pc:     bool = False
    jobs:         int = 1
    stream_completeness: Optional[str] = None
    samples:      int = 0                  # lemma-monotonicity only
    seed:         int = 0


class GraphRecord(BaseModel):
    graph6:    str
    n:         int
    m:         int
    delta:     int
    bridges:   int
    pc:        Optional[Union[int, Literal["undecided"]]] = None
    threshold: Optional[int] = None
    predicted: Optional[str] = None        # None: hypothesis not met, no prediction
    observed:  Optional[str] = None
    violation: bool = False
    note:      str = ""


class RunSummary(BaseModel):
    theorem:             str
    n:                   int
    source:              str
    scanned:             int = 0
    in_class:            int = 0
    filtered:            int = 0
    violations:          int = 0
    undecided:           int = 0
    expected_exceptions: List[str] = []
    exception_matches:   List[str] = []
    exceptions_match:    Optional[bool] = None
    exhaustive:          bool = True
    stream_completeness: Optional[str] = None
    wall_time:           float = 0.0


class VerifyReport(BaseModel):
    records: List[GraphRecord] = []
    summary: RunSummary

    @property
    def violators(self) -> List[GraphRecord]:
        return [r for r in self.records if r.violation]

    @property
    def passed(self) -> bool:
        """No violations beyond the listed exceptions"""
        if self.summary.violations == 0:
            return True
        return bool(self.summary.exceptions_match)
