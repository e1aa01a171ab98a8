# services/bounds.py
# Closed-form edge-count thresholds. Exact integers only; C(a,2) is 0 for a < 2.
#
# m-rules:
#   bridge bound   t=0 -> 0; delta=1 -> t; delta>=2 -> floor((t-1)/(delta-1))
#   main theorem   delta=1 -> k+1 (abstract reading: t); delta>=2 -> floor(k/(delta-1))
#   conjecture     delta=3 -> 1; delta>=4 -> 0

from schemas.bounds import BoundQuery, BoundResult, WoodallSplit
from services.errors import ContractError, InfeasibleBoundError


def binomial2(a: int) -> int:
    return a * (a - 1) // 2 if a >= 2 else 0


def ore_min_edges(n: int) -> int:
    """Edge count that forces a Hamiltonian cycle (corollary of Ore's theorem)"""
    return binomial2(n - 1) + 2


def _block_formula(n: int, m: int, blocks: int, delta: int, tail: int) -> tuple:
    """C(n - m - blocks(delta+1), 2) + blocks*C(delta+1, 2) + tail, with its first argument"""
    first = n - m - blocks * (delta + 1)
    value = binomial2(first) + blocks * binomial2(delta + 1) + tail
    return first, value


# ─── BRIDGE BOUNDS ────────────────────────────────────────────────────────────

def bridge_edge_bound(n: int, t: int, delta: int) -> BoundResult:
    if n < 1:
        raise InfeasibleBoundError(f"n >= 1 (got n={n})")
    if t < 0:
        raise InfeasibleBoundError(f"t >= 0 (got t={t})")
    if delta < 1 or (n > 1 and delta > n - 1):
        raise InfeasibleBoundError(f"1 <= delta <= n-1 (got delta={delta}, n={n})")
    if t > n - 1:
        raise InfeasibleBoundError(f"t <= n-1 (got t={t}, n={n})")

    if t == 0:
        m = 0
    elif delta == 1:
        m = t
    else:
        m = (t - 1) // (delta - 1)

    first, value = _block_formula(n, m, t - m, delta, t)
    if t > 0 and delta >= 2 and first < 0:
        raise InfeasibleBoundError(
            f"n - m - (t-m)(delta+1) >= 0 (got {first} for n={n}, t={t}, delta={delta})"
        )
    formula = (
        f"C({n}-{m}-({t}-{m})*{delta + 1}, 2) + ({t}-{m})*C({delta + 1}, 2) + {t}"
        f" = C({first}, 2) + {t - m}*{binomial2(delta + 1)} + {t}"
    )
    return BoundResult(value=value, m_used=m, formula=formula)


def simple_bridge_bound(n: int, t: int) -> BoundResult:
    if n < 1 or t < 0 or t > max(n - 1, 0):
        raise InfeasibleBoundError(f"0 <= t <= n-1 (got n={n}, t={t})")
    value = binomial2(n - t) + t
    return BoundResult(value=value, m_used=t, formula=f"C({n}-{t}, 2) + {t}")


# ─── PC THRESHOLDS ────────────────────────────────────────────────────────────

def _need(q: BoundQuery, *names: str) -> None:
    missing = [name for name in names if getattr(q, name) is None]
    if missing:
        raise ContractError(f"variant {q.variant} needs: {', '.join(missing)}")


def g_nk(n: int, k: int) -> int:
    return binomial2(n - k - 1) + k + 2


def main_theorem_m(k: int, delta: int, reading: str = "theorem", t: int = None) -> int:
    if delta == 1:
        if reading == "abstract":
            if t is None:
                raise ContractError("the abstract reading of main-thm needs t when delta = 1")
            return t
        return k + 1
    return k // (delta - 1)


def conjecture_m(delta: int) -> int:
    return 1 if delta == 3 else 0


def pc_size_threshold(q: BoundQuery) -> BoundResult:
    variant = q.variant
    n = q.n

    if variant == "g-nk":
        _need(q, "k")
        if q.k < 2:
            raise ContractError(f"g-nk needs k >= 2 (got k={q.k})")
        value = g_nk(n, q.k)
        return BoundResult(value=value, m_used=q.k + 1, formula=f"C({n}-{q.k}-1, 2) + {q.k} + 2")

    if variant == "main-thm":
        _need(q, "k", "delta")
        if q.k < 3 or q.delta < 1:
            raise ContractError(f"main-thm needs k >= 3 and delta >= 1 (got k={q.k}, delta={q.delta})")
        m = main_theorem_m(q.k, q.delta, q.reading, q.t)
        if m > q.k + 1:
            raise ContractError(f"main-thm needs m <= k+1 (got m={m}, k={q.k})")
        first, value = _block_formula(n, m, q.k + 1 - m, q.delta, q.k + 2)
        formula = (
            f"C({n}-{m}-({q.k}+1-{m})*{q.delta + 1}, 2) + ({q.k}+1-{m})*C({q.delta + 1}, 2)"
            f" + {q.k}+2 [reading={q.reading}]"
        )
        return BoundResult(value=value, m_used=m, formula=formula)

    if variant == "thm34":
        if n < 6:
            raise ContractError(f"thm34 needs n >= 6 (got n={n})")
        return BoundResult(value=binomial2(n - 5) + 7, m_used=2, formula=f"C({n}-5, 2) + 7")

    if variant == "conjecture":
        _need(q, "delta")
        if q.delta < 3:
            raise ContractError(f"conjecture needs delta >= 3 (got delta={q.delta})")
        m = conjecture_m(q.delta)
        first, value = _block_formula(n, m, 3 - m, q.delta, 4)
        formula = f"C({n}-{m}-(3-{m})*{q.delta + 1}, 2) + (3-{m})*C({q.delta + 1}, 2) + 4"
        return BoundResult(value=value, m_used=m, formula=formula)

    raise ContractError(f"{variant} is not a pc size threshold variant")


# ─── LONG CYCLES ──────────────────────────────────────────────────────────────

def erdos_gallai_min_edges(c: int, n: int) -> int:
    """Smallest size strictly above c(n-1)/2; any graph that large has circumference > c"""
    return c * (n - 1) // 2 + 1


def woodall_min_edges(n: int, m_param: int) -> WoodallSplit:
    """
    n = t*m + r with 1 <= r <= m. Graphs with more than
    t*C(m+1,2) + C(r,2) edges have c >= m+2 and p >= m+3.
    """
    if not 1 <= m_param <= n:
        raise ContractError(f"woodall needs 1 <= m <= n (got m={m_param}, n={n})")
    t = (n - 1) // m_param
    r = n - t * m_param
    return WoodallSplit(t=t, r=r, threshold=t * binomial2(m_param + 1) + binomial2(r))


# ─── DISPATCH ─────────────────────────────────────────────────────────────────

def evaluate(q: BoundQuery) -> BoundResult:
    """Evaluate any variant; this is what the bounds subcommand calls"""
    if q.variant == "bridge-bound-lemma":
        _need(q, "t", "delta")
        return bridge_edge_bound(q.n, q.t, q.delta)
    if q.variant == "bridge-bound-simple":
        _need(q, "t")
        return simple_bridge_bound(q.n, q.t)
    if q.variant == "erdos-gallai":
        _need(q, "c")
        if q.c < 2 or q.n < 3:
            raise ContractError(f"erdos-gallai needs c >= 2 and n >= 3 (got c={q.c}, n={q.n})")
        value = erdos_gallai_min_edges(q.c, q.n)
        return BoundResult(value=value, m_used=0, formula=f"floor({q.c}*({q.n}-1)/2) + 1")
    if q.variant == "woodall":
        _need(q, "m_param")
        split = woodall_min_edges(q.n, q.m_param)
        formula = (
            f"{split.t}*C({q.m_param}+1, 2) + C({split.r}, 2)"
            f" [n = {split.t}*{q.m_param} + {split.r}]"
        )
        return BoundResult(value=split.threshold, m_used=q.m_param, formula=formula)
    return pc_size_threshold(q)
