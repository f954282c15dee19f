"""Multiplicity-vector search over projective multisets, plus the
residue-reduction driver built on top of it.

A SearchSpec fixes target parameters and the constraint set; the runner
explores multiplicity vectors depth first (index ascending, multiplicity
descending) and reports witnesses or exhaustion through Certificates.
Budgets count visited nodes, never wall time, so outcomes are
machine-independent; exhausting a budget is the first-class outcome
"inconclusive", never a silent pass.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import codes, kernels
from .bounds import k_bracket
from .codes import LinearCode
from .simplex import (MultiplicityVector, build_multiset_code, first_row_support,
                      format_multiplicities, multiplicity_bounds, simplex_matrix,
                      unit_column_indices, weight_profile)

TOOL_VERSION = "lcdcodes 0.1.0"

MODE_PAPER = "paper-replication"
MODE_FREE = "unconstrained"
GOAL_FIND_ONE = "find-one"
GOAL_ENUMERATE = "enumerate-all"
GOAL_PROVE_EMPTY = "prove-empty"

KIND_WITNESS = "existence-witness"
KIND_EMPTY = "exhaustive-nonexistence"
KIND_BOUND_EMPTY = "bound-nonexistence"
KIND_INCONCLUSIVE = "inconclusive"

BUDGET_ENV_VAR = "LCDCODES_BUDGET"
# large enough for every bundled desk-scale certificate (the biggest,
# the [18,4,11] emptiness run, visits ~6e8 nodes); small enough that a
# hopeless search gives up within about a minute of compiled time
DEFAULT_NODE_BUDGET = 10 ** 9


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        return int(raw)
    return DEFAULT_NODE_BUDGET


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    """Constraint set for one multiplicity-vector search."""

    q: int
    k: int
    n: int
    d: int
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    pinned: frozenset[int]          # 1-indexed columns forced to m_i >= 1
    support_sum: tuple[tuple[int, ...], int] | None
    mode: str
    goal: str

    def __post_init__(self) -> None:
        p = k_bracket(self.q, self.k)
        if len(self.lo) != p or len(self.hi) != p:
            raise SearchError(f"bound vectors must have length {p}")
        if not self.pinned <= set(range(1, p + 1)):
            raise SearchError("pinned indices out of range")
        if self.mode not in (MODE_PAPER, MODE_FREE):
            raise SearchError(f"unknown mode {self.mode!r}")
        if self.goal not in (GOAL_FIND_ONE, GOAL_ENUMERATE, GOAL_PROVE_EMPTY):
            raise SearchError(f"unknown goal {self.goal!r}")
        if self.mode == MODE_PAPER and self.support_sum is not None:
            if self.support_sum[1] != self.d:
                raise SearchError("paper-replication support target must equal d")

    @property
    def space_is_empty(self) -> bool:
        return any(h < l for l, h in zip(self.lo, self.hi))

    def to_dict(self) -> dict:
        return {
            "q": self.q, "k": self.k, "n": self.n, "d": self.d,
            "lo": list(self.lo), "hi": list(self.hi),
            "pinned": sorted(self.pinned),
            "support_sum": None if self.support_sum is None else
                {"indices": list(self.support_sum[0]), "target": self.support_sum[1]},
            "mode": self.mode, "goal": self.goal,
        }

    def key(self) -> tuple:
        return (self.q, self.k, self.n, self.d, self.lo, self.hi,
                tuple(sorted(self.pinned)), self.support_sum, self.mode, self.goal)


def make_search_spec(q: int, k: int, n: int, d: int,
                     mode: str = MODE_PAPER, goal: str = GOAL_PROVE_EMPTY) -> SearchSpec:
    """Build a spec with the standard constraint set.

    Bounds come from the multiplicity window.  In paper-replication mode
    the unit columns are pinned to m_i >= 1 and the first simplex row's
    support is constrained to sum to exactly d, the symmetry assumptions
    that hold without loss of generality for near-Griesmer targets;
    unconstrained mode keeps only the window.
    """
    if n < k:
        raise SearchError(f"need n >= k, got n={n}, k={k}")
    if d < 1:
        raise SearchError("need d >= 1")
    p = k_bracket(q, k)
    lo_w, hi_w = multiplicity_bounds(q, k, n, d)
    lo = [lo_w] * p
    hi = [max(hi_w, -1)] * p
    support = None
    if mode == MODE_PAPER:
        for i in unit_column_indices(q, k):
            lo[i - 1] = max(lo[i - 1], 1)
        support = (first_row_support(q, k), d)
        pinned = frozenset(unit_column_indices(q, k))
    else:
        pinned = frozenset()
    return SearchSpec(q, k, n, d, tuple(lo), tuple(hi), pinned, support, mode, goal)


@dataclass(frozen=True)
class RawResult:
    status: int
    nodes: int
    witnesses: tuple[tuple[int, ...], ...]
    wall_time_s: float
    engine_impl: str


def _kernel_arrays(spec: SearchSpec):
    p = k_bracket(spec.q, spec.k)
    s = simplex_matrix(spec.q, spec.k).arr.astype(np.int64)
    inner = (s.T @ s) % spec.q
    nonorth = inner != 0
    lo = np.array(spec.lo, dtype=np.int64)
    hi = np.array(spec.hi, dtype=np.int64)
    ol_lists = [np.nonzero(~nonorth[:, j])[0] for j in range(p)]
    ol_ptr = np.zeros(p + 1, dtype=np.int64)
    for j, l in enumerate(ol_lists):
        ol_ptr[j + 1] = ol_ptr[j] + len(l)
    ol_dat = (np.concatenate(ol_lists) if ol_ptr[-1] else np.zeros(0, np.int64)).astype(np.int64)
    in_support = np.zeros(p, dtype=np.uint8)
    s_target = -1
    if spec.support_sum is not None:
        for i in spec.support_sum[0]:
            in_support[i - 1] = 1
        s_target = spec.support_sum[1]
    # sno[x, j] = sum over i >= j of hi[i] restricted to columns not orthogonal
    # to x; sno_sup is the same sum restricted further to support columns
    contrib = nonorth.astype(np.int64) * hi[None, :]
    sno = np.zeros((p, p + 1), dtype=np.int64)
    sno[:, :p] = contrib[:, ::-1].cumsum(axis=1)[:, ::-1]
    contrib_sup = contrib * in_support.astype(np.int64)[None, :]
    sno_sup = np.zeros((p, p + 1), dtype=np.int64)
    sno_sup[:, :p] = contrib_sup[:, ::-1].cumsum(axis=1)[:, ::-1]
    # values tried balanced-first: witnesses tend to sit near the uniform
    # multiplicity n / p, and sibling order does not change exhaustive runs
    center = int(round(spec.n / p))
    wid = int(max(hi[i] - lo[i] + 1 for i in range(p)))
    vorder = np.full((p, wid), -1, dtype=np.int64)
    for i in range(p):
        vals = sorted(range(int(lo[i]), int(hi[i]) + 1),
                      key=lambda v: (abs(v - center), -v))
        vorder[i, :len(vals)] = vals
    def sufsum(vals, mask=None):
        v = vals.copy()
        if mask is not None:
            v = v * mask
        out = np.zeros(p + 1, dtype=np.int64)
        out[:p] = v[::-1].cumsum()[::-1]
        return out
    suf_lo = sufsum(lo)
    suf_hi = sufsum(hi)
    suf_slo = sufsum(lo, in_support.astype(np.int64))
    suf_shi = sufsum(hi, in_support.astype(np.int64))
    gram_terms = np.zeros((p, spec.k, spec.k), dtype=np.int64)
    for j in range(p):
        gram_terms[j] = np.outer(s[:, j], s[:, j]) % spec.q
    return (p, spec.k, spec.q, lo, hi, spec.n, spec.d, in_support, s_target,
            ol_ptr, ol_dat, sno, sno_sup, vorder,
            suf_lo, suf_hi, suf_slo, suf_shi, gram_terms)


def _run_raw(spec: SearchSpec, budget: int, engine: str, max_witnesses: int) -> RawResult:
    if spec.space_is_empty:
        return RawResult(kernels.STATUS_EXHAUSTED, 0, (), 0.0, "window-empty")
    args = _kernel_arrays(spec)
    witnesses = np.zeros((max_witnesses, args[0]), dtype=np.int64)
    stop = spec.goal == GOAL_FIND_ONE
    fn = kernels.dfs_python if engine == "python" else kernels.dfs_compiled
    impl = "python" if engine == "python" else ("numba" if kernels.HAVE_NUMBA else "python")
    t0 = time.perf_counter()
    status, nodes, nwit = fn(*args, np.int64(budget), stop, witnesses)
    wall = time.perf_counter() - t0
    if status == kernels.STATUS_WITNESS_OVERFLOW:
        raise SearchError(
            f"witness store overflow (> {max_witnesses}); raise max_witnesses or use find-one"
        )
    wits = tuple(tuple(int(v) for v in witnesses[i]) for i in range(nwit))
    return RawResult(int(status), int(nodes), wits, wall, impl)


_CACHE: dict[tuple, RawResult] = {}


def clear_search_cache() -> None:
    _CACHE.clear()


def run_raw_search(spec: SearchSpec, budget: int | None = None, engine: str = "auto",
                   max_witnesses: int = 65536, use_cache: bool = True) -> RawResult:
    if budget is None:
        budget = default_budget()
    key = (spec.key(), budget, engine if engine == "python" else "auto")
    if use_cache and key in _CACHE:
        return _CACHE[key]
    res = _run_raw(spec, budget, engine, max_witnesses)
    if use_cache:
        _CACHE[key] = res
    return res


def verify_witness(spec: SearchSpec, m: tuple[int, ...]) -> dict:
    """Independent re-check of a reported witness; raises on any mismatch."""
    mv = MultiplicityVector(spec.q, spec.k, m)
    if mv.n != spec.n:
        raise AssertionError("witness has wrong length")
    code = build_multiset_code(mv)
    wmin = codes.min_weight(code)
    if wmin < spec.d:
        raise AssertionError(f"witness minimum weight {wmin} < {spec.d}")
    if int(weight_profile(mv).min()) != wmin:
        raise AssertionError("weight profile disagrees with enumeration")
    if not codes.is_lcd(code):
        raise AssertionError("witness is not LCD")
    if not codes.dual_distance_at_least_2(code):
        raise AssertionError("witness dual distance below 2")
    return {"m": format_multiplicities(mv), "n": mv.n, "k": spec.k, "min_weight": wmin}


@dataclass(frozen=True)
class Certificate:
    """Self-contained record of one search outcome."""

    kind: str
    engine: str
    q: int
    params: dict
    goal: str
    witnesses: tuple[dict, ...]
    stats: dict
    search_spec: dict | None
    conclusion: str
    notes: tuple[str, ...] = ()
    version: str = TOOL_VERSION

    def to_dict(self) -> dict:
        return {
            "kind": self.kind, "engine": self.engine, "q": self.q,
            "params": self.params, "goal": self.goal,
            "witnesses": list(self.witnesses), "stats": self.stats,
            "search_spec": self.search_spec, "conclusion": self.conclusion,
            "notes": list(self.notes), "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.to_json() + "\n")


def _status_kind(status: int, nwit: int, goal: str) -> str:
    if status == kernels.STATUS_BUDGET:
        return KIND_INCONCLUSIVE
    if nwit > 0:
        return KIND_WITNESS
    return KIND_EMPTY


def search_multiset(spec: SearchSpec, budget: int | None = None,
                    engine: str = "auto") -> Certificate:
    """Run the search and wrap the outcome in a verified Certificate."""
    if budget is None:
        budget = default_budget()
    res = run_raw_search(spec, budget, engine)
    kind = _status_kind(res.status, len(res.witnesses), spec.goal)
    wits = tuple(verify_witness(spec, m) for m in res.witnesses)
    params = {"n": spec.n, "k": spec.k, "d": spec.d}
    stats = {"nodes": res.nodes, "wall_time_s": round(res.wall_time_s, 6),
             "budget": budget, "engine_impl": res.engine_impl}
    scope = ("multiplicity vectors under the replication-mode symmetry constraints"
             if spec.mode == MODE_PAPER else
             "all multiplicity vectors within the window")
    if kind == KIND_WITNESS:
        conclusion = (f"found an LCD [{spec.n},{spec.k}] code over GF({spec.q}) "
                      f"with minimum weight >= {spec.d} (witness re-verified)")
    elif kind == KIND_EMPTY:
        conclusion = (f"exhausted {scope}: no LCD [{spec.n},{spec.k},{spec.d}] code "
                      f"over GF({spec.q}) with dual distance >= 2 in the searched class")
    else:
        conclusion = (f"budget of {budget} nodes exhausted before completion; "
                      f"no conclusion about [{spec.n},{spec.k},{spec.d}]")
    return Certificate(kind, "multiset-dfs", spec.q, params, spec.goal, wits,
                       stats, spec.to_dict(), conclusion)


def enumerate_lcd_multiset(spec: SearchSpec, budget: int | None = None,
                           engine: str = "auto") -> list[MultiplicityVector]:
    """All m in the constraint set whose code is LCD with minimum weight >= d.

    Raises SearchError on budget exhaustion (use search_multiset for the
    certificate-level inconclusive outcome).
    """
    run_spec = spec if spec.goal == GOAL_ENUMERATE else replace(spec, goal=GOAL_ENUMERATE)
    res = run_raw_search(run_spec, budget, engine)
    if res.status == kernels.STATUS_BUDGET:
        raise SearchError("node budget exhausted before the enumeration completed")
    return [MultiplicityVector(spec.q, spec.k, m) for m in res.witnesses]


def split_specs(spec: SearchSpec, index: int = 1) -> list[SearchSpec]:
    """Partition the tree by the value at a 1-indexed column; the subtree
    specs have that column's window pinned to a single value."""
    j = index - 1
    out = []
    for v in range(spec.hi[j], spec.lo[j] - 1, -1):
        lo = list(spec.lo)
        hi = list(spec.hi)
        lo[j] = hi[j] = v
        out.append(replace(spec, lo=tuple(lo), hi=tuple(hi)))
    return out


def run_split_search(spec: SearchSpec, budget: int | None = None,
                     workers: int = 2, index: int = 1) -> RawResult:
    """Union of the per-subtree runs; equivalent to the sequential search."""
    if budget is None:
        budget = default_budget()
    parts = split_specs(spec, index)
    stop_goal = spec.goal == GOAL_FIND_ONE
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(
            lambda sp: run_raw_search(sp, budget, use_cache=False), parts))
    nodes = sum(r.nodes for r in results)
    wall = max((r.wall_time_s for r in results), default=0.0)
    wits: list[tuple[int, ...]] = []
    for r in results:
        wits.extend(r.witnesses)
    if any(r.status == kernels.STATUS_BUDGET for r in results):
        status = kernels.STATUS_BUDGET
    elif stop_goal and wits:
        status = kernels.STATUS_STOPPED
    else:
        status = kernels.STATUS_EXHAUSTED
    wits_sorted = tuple(sorted(wits, reverse=True))
    if stop_goal and wits_sorted:
        wits_sorted = wits_sorted[:1]
    return RawResult(status, nodes, wits_sorted, wall,
                     f"split-{len(parts)}")


# ---------------------------------------------------------------
# residue reduction driver
# ---------------------------------------------------------------

@dataclass(frozen=True)
class ReductionPlan:
    """One residue class n = [k]_q s + t with distance q^(k-1) s + alpha."""

    q: int
    k: int
    t: int
    alpha: int
    r: int = field(init=False)
    s_prime: int = field(init=False)
    target: tuple[int, int, int] = field(init=False)

    def __post_init__(self) -> None:
        r = reduction_r(self.q, self.k, self.t, self.alpha)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s_prime", reduction_s_prime(self.q, self.k, self.t, r))
        object.__setattr__(self, "target", (self.q * r, self.k, (self.q - 1) * r))


def reduction_r(q: int, k: int, t: int, alpha: int) -> int:
    """q^(k-1) t - [k]_q alpha; the s terms cancel, so s never appears."""
    p = k_bracket(q, k)
    if not 0 <= t < p:
        raise SearchError(f"need 0 <= t < {p}, got {t}")
    r = q ** (k - 1) * t - p * alpha
    if r < 0:
        raise SearchError(f"inconsistent residue pair: r = {r} < 0")
    return r


def reduction_s_prime(q: int, k: int, t: int, r: int) -> int:
    p = k_bracket(q, k)
    if (q * r - t) % p != 0:
        raise SearchError(f"invalid plan: {q}*{r} - {t} not divisible by {p}")
    return (q * r - t) // p + 1


def apply_main_reduction(plan: ReductionPlan, budget: int | None = None,
                         engine: str = "auto") -> Certificate:
    """Search the reduced target [qr, k, (q-1)r]; an empty result rules out
    the whole residue family [[k]_q s + t, k, q^(k-1) s + alpha], s >= 0."""
    qr, k, d_target = plan.target
    if qr < k:
        raise SearchError(f"reduction needs q*r >= k, got {qr} < {k}")
    spec = make_search_spec(plan.q, plan.k, qr, d_target,
                            mode=MODE_PAPER, goal=GOAL_PROVE_EMPTY)
    inner = search_multiset(spec, budget, engine)
    p = k_bracket(plan.q, plan.k)
    family = (f"[{p}s+{plan.t}, {plan.k}, {plan.q ** (plan.k - 1)}s+{plan.alpha}]")
    params = {"t": plan.t, "alpha": plan.alpha, "r": plan.r,
              "s_prime": plan.s_prime, "target": list(plan.target)}
    notes = ("family statement covers integers s >= 0 with n >= k",)
    if inner.kind == KIND_EMPTY:
        conclusion = (f"no LCD {family} code over GF({plan.q}) exists for any s >= 0 "
                      f"(reduced search at s' - 1 = {plan.s_prime - 1} exhausted)")
        kind = KIND_EMPTY
    elif inner.kind == KIND_WITNESS:
        conclusion = (f"reduced target [{qr},{k},{d_target}] admits an LCD code; "
                      f"the family {family} is not ruled out")
        kind = KIND_WITNESS
    else:
        conclusion = f"budget exhausted on the reduced target; {family} undecided"
        kind = KIND_INCONCLUSIVE
    return Certificate(kind, "reduction+multiset-dfs", plan.q, params,
                       GOAL_PROVE_EMPTY, inner.witnesses,
                       dict(inner.stats), inner.search_spec, conclusion, notes)
