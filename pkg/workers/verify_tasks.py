# workers/verify_tasks.py
# Per-graph theorem checks. Each tag pairs a hypothesis test with a claim
# evaluator; verify_graph is the picklable entry point the pool fans out.
#
# A claim is decided with the cheapest exact call: "pc <= k" goes through
# decide_with_method, and the exact value is only computed for violators,
# for prop11, or when the task asks for it. Past the search cap, "pc <= 2"
# can still be certified by the Dirac degree condition or by one vertex
# deletion; anything else is recorded as undecided.

import logging
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from config import settings
from graphs.graph import Graph
from graphs.io import emit_graph6, parse_graph6
from schemas.bounds import BoundQuery
from schemas.report import GraphRecord, VerifyTask
from services.bounds import (
    binomial2,
    bridge_edge_bound,
    conjecture_m,
    erdos_gallai_min_edges,
    g_nk,
    ore_min_edges,
    pc_size_threshold,
    woodall_min_edges,
)
from services.coloring import decide_with_method, deletion_certificate, dirac_traceable, pc_exact
from services.errors import ContractError, InfeasibleBoundError, UnsupportedSizeError
from services.structure import build_bridge_tree, find_bridges, hamiltonian_path, path_cycle_profile

logger = logging.getLogger(__name__)

FILTERED  = "filtered"
OUTSIDE   = "outside"
CHECKED   = "checked"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class Facts:
    n:        int
    m:        int
    delta:    int
    bridges:  frozenset
    complete: bool

    @property
    def t(self) -> int:
        return len(self.bridges)


class Hypothesis(NamedTuple):
    holds:     bool
    threshold: Optional[int] = None
    note:      str = ""


class Claim(NamedTuple):
    statement: str
    holds:     Optional[bool]     # None: undecided
    negation:  str
    note:      str = ""
    pc:        Optional[int] = None


class Theorem(NamedTuple):
    hypothesis: Callable
    claim:      Callable
    about_pc:   bool = True


def facts_of(g: Graph) -> Facts:
    return Facts(
        n=g.n,
        m=g.m,
        delta=min(g.degrees(), default=0),
        bridges=find_bridges(g),
        complete=g.is_complete(),
    )


# ─── CONCLUSION HELPERS ───────────────────────────────────────────────────────

def _pc_at_most(g: Graph, k: int) -> Claim:
    statement, negation = f"pc<={k}", f"pc>{k}"
    try:
        coloring, method = decide_with_method(g, k)
        return Claim(statement, coloring is not None, negation, method)
    except UnsupportedSizeError as exc:
        if k >= 2:
            if dirac_traceable(g):
                return Claim(statement, True, negation, "dirac-traceable")
            v = deletion_certificate(g)
            if v is not None:
                return Claim(statement, True, negation, f"deletion-certificate v={v}")
        return Claim(statement, None, negation, f"undecided: {exc}")


def _pc_is_two(g: Graph) -> Claim:
    """Noncomplete graphs already need two colors, so pc = 2 iff pc <= 2"""
    claim = _pc_at_most(g, 2)
    return claim._replace(statement="pc=2", negation="pc>2")


def exact_pc(g: Graph):
    try:
        return pc_exact(g).pc
    except UnsupportedSizeError:
        return UNDECIDED


# ─── HYPOTHESES + CLAIMS PER TAG ──────────────────────────────────────────────

def _everyone(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    return Hypothesis(True)


def _prop11_claim(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
    try:
        result = pc_exact(g)
    except UnsupportedSizeError as exc:
        return Claim("prop11", None, "", f"undecided: {exc}")
    pc = result.pc
    parts = [("pc=1", pc == 1) if facts.complete else ("pc>1", pc > 1)]
    if g.is_tree() and g.n >= 2:
        max_degree = max(g.degrees())
        parts.append((f"pc={max_degree}", pc == max_degree))
    if g.n <= settings.hamiltonian_max_n and hamiltonian_path(g) is not None:
        parts.append(("pc<=2", pc <= 2))
    statement = "; ".join(text for text, _ in parts)
    holds = all(ok for _, ok in parts)
    return Claim(statement, holds, f"pc={pc}", result.method, pc)


def _bridgeless(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    return Hypothesis(facts.t == 0, note="" if facts.t == 0 else f"t={facts.t}")


def _at_most_three(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
    return _pc_at_most(g, 3)


def _gstar_bound(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    return Hypothesis(True, threshold=max(3, build_bridge_tree(g).max_degree))


def _at_most_threshold(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
    return _pc_at_most(g, threshold)


def _gnk_budget(task: VerifyTask) -> int:
    k = 2 if task.k is None else task.k
    if k < 2:
        raise ContractError(f"thm-gnk needs k >= 2 (got k={k})")
    return k


def _gnk_size(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    threshold = g_nk(facts.n, _gnk_budget(task))
    return Hypothesis(facts.m >= threshold, threshold)


def _at_most_task_k(default: int) -> Callable:
    def claim(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
        return _pc_at_most(g, default if task.k is None else task.k)
    return claim


def _has_order_two(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    if facts.n < 2:
        return Hypothesis(False, note="delta is 0 on one vertex")
    try:
        bound = bridge_edge_bound(facts.n, facts.t, facts.delta)
    except InfeasibleBoundError as exc:
        return Hypothesis(True, None, str(exc))
    return Hypothesis(True, bound.value)


def _size_within_bound(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
    if threshold is None:
        return Claim("bound defined", False, "bound infeasible for an actual graph")
    return Claim(f"m<={threshold}", facts.m <= threshold, f"m={facts.m}")


def _main_size(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    k = 3 if task.k is None else task.k
    query = BoundQuery(
        variant="main-thm", n=facts.n, k=k, delta=max(facts.delta, 1),
        t=facts.t, reading=task.reading,
    )
    try:
        threshold = pc_size_threshold(query).value
    except ContractError as exc:
        if k < 3:
            raise
        return Hypothesis(False, note=str(exc))
    return Hypothesis(facts.m >= threshold, threshold)


def _small_order(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    ok = 5 <= facts.n <= 8 and not facts.complete and facts.delta >= 2
    return Hypothesis(ok)


def _pc_two_claim(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
    return _pc_is_two(g)


def _k2_d2_size(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    degree_ok = facts.delta >= 2 if task.widen_delta else facts.delta == 2
    threshold = binomial2(facts.n - 5) + 7
    return Hypothesis(facts.n >= 6 and degree_ok and facts.m >= threshold, threshold)


def _at_most_two(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
    return _pc_at_most(g, 2)


def _quarter_degree(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    return Hypothesis(facts.n >= 9 and not facts.complete and 4 * facts.delta >= facts.n)


def _long_cycle_range(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    if facts.n < 3:
        return Hypothesis(False, note="needs n >= 3")
    if facts.n > settings.profile_max_n:
        return Hypothesis(False, note=f"n above profile cap {settings.profile_max_n}")
    return Hypothesis(True)


def _long_cycle_claim(task: VerifyTask, g: Graph, facts: Facts, threshold) -> Claim:
    """Every admissible Erdos-Gallai, Woodall and Ore-size conclusion"""
    n, m = facts.n, facts.m
    profile = path_cycle_profile(g)
    c, p = profile.c, profile.p
    failures = []
    for bound in range(2, n + 1):
        if m >= erdos_gallai_min_edges(bound, n) and not c > bound:
            failures.append(f"erdos-gallai c={bound}: circumference {c}")
    for block in range(1, n + 1):
        split = woodall_min_edges(n, block)
        if m <= split.threshold:
            continue
        if c < block + 2:
            failures.append(f"woodall m={block}: circumference {c}")
        if n >= block + 3 and p < block + 3:
            failures.append(f"woodall m={block}: detour {p}")
    if n >= 3 and m >= ore_min_edges(n) and c != n:
        failures.append(f"ore size: circumference {c}")
    note = f"c={c} p={p}"
    return Claim("long-cycle bounds hold", not failures, "; ".join(failures), note)


def _conjecture_size(task: VerifyTask, g: Graph, facts: Facts) -> Hypothesis:
    if facts.delta < 3:
        return Hypothesis(False, note=f"delta={facts.delta}")
    query = BoundQuery(variant="conjecture", n=facts.n, delta=facts.delta)
    threshold = pc_size_threshold(query).value
    note = f"m-rule={conjecture_m(facts.delta)}"
    return Hypothesis(facts.m >= threshold, threshold, note)


THEOREMS = {
    "prop11":                Theorem(_everyone, _prop11_claim),
    "thm2-bridgeless":       Theorem(_bridgeless, _at_most_three),
    "thm3-gstar":            Theorem(_gstar_bound, _at_most_threshold),
    "thm-gnk":               Theorem(_gnk_size, _at_most_task_k(2)),
    "lemma-bridge-bound":    Theorem(_has_order_two, _size_within_bound, about_pc=False),
    "thm-main-k3":           Theorem(_main_size, _at_most_task_k(3)),
    "thm-small-order":       Theorem(_small_order, _pc_two_claim),
    "thm-k2-d2":             Theorem(_k2_d2_size, _at_most_two),
    "remark-quarter-degree": Theorem(_quarter_degree, _pc_two_claim),
    "woodall-eg-soundness":  Theorem(_long_cycle_range, _long_cycle_claim, about_pc=False),
    "conjecture-k2":         Theorem(_conjecture_size, _at_most_two),
}


# ─── ENTRY POINTS ─────────────────────────────────────────────────────────────

def passes_filters(task: VerifyTask, facts: Facts) -> bool:
    if task.min_degree is not None and facts.delta < task.min_degree:
        return False
    if task.min_size is not None and facts.m < task.min_size:
        return False
    if task.bridges is not None and facts.t != task.bridges:
        return False
    return True


def in_hypothesis_class(task: VerifyTask, g: Graph) -> bool:
    """Filters plus hypothesis, without deciding the conclusion"""
    if not g.is_connected():
        return False
    facts = facts_of(g)
    return passes_filters(task, facts) and THEOREMS[task.theorem].hypothesis(task, g, facts).holds


def evaluate_graph(task: VerifyTask, g: Graph) -> tuple:
    """Return (GraphRecord, status) with status one of filtered/outside/checked/undecided"""
    base = dict(graph6=emit_graph6(g), n=g.n, m=g.m, delta=min(g.degrees(), default=0), bridges=0)
    if not g.is_connected():
        return GraphRecord(**base, note="disconnected"), OUTSIDE

    facts = facts_of(g)
    base["bridges"] = facts.t
    if not passes_filters(task, facts):
        return GraphRecord(**base, note=FILTERED), FILTERED

    theorem = THEOREMS[task.theorem]
    hypothesis = theorem.hypothesis(task, g, facts)
    if not hypothesis.holds:
        return GraphRecord(**base, threshold=hypothesis.threshold, note=hypothesis.note or "hypothesis not met"), OUTSIDE

    claim = theorem.claim(task, g, facts, hypothesis.threshold)
    note = "; ".join(part for part in (hypothesis.note, claim.note) if part)
    if claim.holds is None:
        return GraphRecord(
            **base, pc=UNDECIDED, threshold=hypothesis.threshold,
            predicted=claim.statement, note=note,
        ), UNDECIDED

    pc = claim.pc
    if theorem.about_pc and pc is None and (task.exact_pc or not claim.holds):
        pc = exact_pc(g)
    observed = claim.statement if claim.holds else claim.negation
    if not claim.holds and isinstance(pc, int) and theorem.about_pc:
        observed = f"pc={pc}"
    if not claim.holds:
        logger.info("[VERIFY] violation theorem=%s graph6=%s observed=%s", task.theorem, base["graph6"], observed)
    return GraphRecord(
        **base, pc=pc, threshold=hypothesis.threshold,
        predicted=claim.statement, observed=observed,
        violation=not claim.holds, note=note,
    ), CHECKED


def verify_graph(payload: tuple) -> tuple:
    """Pool entry point: (task dict, graph6) -> (record dict, status)"""
    task_data, graph6 = payload
    task = VerifyTask.model_validate(task_data)
    record, status = evaluate_graph(task, parse_graph6(graph6))
    return record.model_dump(), status
