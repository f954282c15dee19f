"""Parity-check column search for distance-3 codes with small redundancy.

A code with redundancy i and minimum weight 3 has a check matrix whose
columns are pairwise independent nonzero vectors, i.e. an n-subset of
the projective points of dimension i.  Over GF(3) scaling a column by 2
leaves the Gram HH^T unchanged (4 = 1 mod 3), so one representative per
point suffices for the LCD question.  The code is LCD iff HH^T is
nonsingular.  When n exceeds the point count no such matrix exists at
all, which is reported as a bound, not a search.
"""

from __future__ import annotations

import time
from itertools import combinations, product

import numpy as np

from . import codes
from .bounds import sphere_packing_max_n
from .codes import LinearCode
from .gf import FqMatrix, nullspace_basis
from .kernels import _gram_rank
from .search import (Certificate, GOAL_ENUMERATE, GOAL_FIND_ONE, GOAL_PROVE_EMPTY,
                     KIND_BOUND_EMPTY, KIND_EMPTY, KIND_INCONCLUSIVE, KIND_WITNESS,
                     SearchError, default_budget)


def projective_points(q: int, i: int) -> list[tuple[int, ...]]:
    """One representative per projective class, leading coefficient 1,
    ascending lexicographic order."""
    out = []
    for v in product(range(q), repeat=i):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            out.append(v)
    return out


def check_matrix_from_points(q: int, pts: list[tuple[int, ...]]) -> FqMatrix:
    return FqMatrix(q, np.array(pts, dtype=np.uint8).T.copy())


def code_from_check(h: FqMatrix) -> LinearCode:
    return codes.from_generator(nullspace_basis(h))


def _nonsingular(gram: np.ndarray, i: int, q: int) -> bool:
    return _gram_rank(gram.astype(np.int64), i, q) == i


def highrate_column_search(q: int, n: int, i: int, d: int = 3,
                           goal: str = GOAL_PROVE_EMPTY,
                           budget: int | None = None) -> Certificate:
    if d != 3:
        raise SearchError("only minimum weight 3 is supported here")
    if q not in (2, 3):
        raise SearchError(f"unsupported field size {q}")
    if not 2 <= i <= 6:
        raise SearchError(f"redundancy must be in 2..6, got {i}")
    if n <= i:
        raise SearchError(f"need n > i for positive dimension, got n={n}, i={i}")
    if goal not in (GOAL_FIND_ONE, GOAL_ENUMERATE, GOAL_PROVE_EMPTY):
        raise SearchError(f"unknown goal {goal!r}")
    if budget is None:
        budget = default_budget()
    params = {"n": n, "k": n - i, "d": 3, "redundancy": i}
    cap = sphere_packing_max_n(q, i)
    if n > cap:
        conclusion = (f"no [{n},{n - i},3] code over GF({q}) exists at all: "
                      f"only {cap} pairwise independent nonzero columns are "
                      f"available, so some pair of columns is dependent")
        return Certificate(KIND_BOUND_EMPTY, "parity-column-subsets", q, params,
                           goal, (), {"nodes": 0, "budget": budget,
                                      "engine_impl": "bound", "wall_time_s": 0.0},
                           {"points": cap, "n": n, "redundancy": i},
                           conclusion)
    pts = projective_points(q, i)
    npts = len(pts)
    outer = np.zeros((npts, i, i), dtype=np.int64)
    for j, p in enumerate(pts):
        v = np.array(p, dtype=np.int64)
        outer[j] = np.outer(v, v) % q
    complement = (npts - n) < n
    total = outer.sum(axis=0) % q
    t0 = time.perf_counter()
    nodes = 0
    hits: list[tuple[int, ...]] = []
    status_kind = KIND_EMPTY
    size = npts - n if complement else n
    for sub in combinations(range(npts), size):
        nodes += 1
        if nodes > budget:
            status_kind = KIND_INCONCLUSIVE
            break
        if complement:
            gram = (total - outer[list(sub)].sum(axis=0)) % q if size else total
        else:
            gram = outer[list(sub)].sum(axis=0) % q
        if _nonsingular(gram, i, q):
            if complement:
                excl = set(sub)
                chosen = tuple(j for j in range(npts) if j not in excl)
            else:
                chosen = sub
            hits.append(chosen)
            if goal == GOAL_FIND_ONE:
                status_kind = KIND_WITNESS
                break
    wall = time.perf_counter() - t0
    if status_kind != KIND_INCONCLUSIVE and hits:
        status_kind = KIND_WITNESS
    wits = []
    for chosen in hits[:16]:
        h = check_matrix_from_points(q, [pts[j] for j in chosen])
        code = code_from_check(h)
        if code.n != n or code.k != n - i:
            raise AssertionError("witness dimensions disagree")
        if not codes.is_lcd(code):
            raise AssertionError("witness is not LCD")
        if codes.min_weight_at_most(code, 2):
            raise AssertionError("witness minimum weight below 3")
        if not codes.min_weight_at_most(code, 3):
            raise AssertionError("witness minimum weight above 3")
        wits.append({"check_rows": ["".join(str(int(x)) for x in h.row(r))
                                    for r in range(i)],
                     "n": n, "k": n - i, "min_weight": 3})
    stats = {"nodes": nodes, "budget": budget,
             "engine_impl": "complement-subsets" if complement else "subsets",
             "wall_time_s": round(wall, 6)}
    spec = {"points": npts, "n": n, "redundancy": i,
            "mode": "complement" if complement else "direct"}
    notes = []
    if status_kind == KIND_WITNESS:
        conclusion = (f"found an LCD [{n},{n - i},3] code over GF({q}); "
                      f"{len(hits)} subsets hit" if goal != GOAL_FIND_ONE else
                      f"found an LCD [{n},{n - i},3] code over GF({q})")
    elif status_kind == KIND_EMPTY:
        conclusion = (f"exhausted all {nodes} column subsets: "
                      f"no LCD [{n},{n - i},3] code over GF({q}) exists")
        notes.append("non-LCD codes with these parameters may still exist; "
                     "the claim is about LCD codes only")
    else:
        conclusion = f"budget of {budget} subsets exhausted; no conclusion"
    return Certificate(status_kind, "parity-column-subsets", q, params, goal,
                       tuple(wits), stats, spec, conclusion, tuple(notes))
