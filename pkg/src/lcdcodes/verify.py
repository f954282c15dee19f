"""Re-verification harness for the bundled tables and claims.

Each table becomes a TableReport of cells.  A cell passes only when every
claim it makes is re-established locally, by recomputation, by a stored
witness, or by a fresh search certificate.  Values that rest on outside
tables or on searches beyond desk scale are marked cited-external or
inconclusive and never counted as verified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import codes, method1, search
from .bounds import griesmer_g, lcd_upper_bound, sphere_packing_max_n
from .codes import LinearCode
from .gf import FqMatrix
from .highrate import highrate_column_search
from .refdata import (BINARY_REDUCTION, D3_SMALL, FIG_CODE_PARAMS,
                      G2_COEFF, G3_COEFF, GB_RESIDUES_BINARY,
                      GB_RESIDUES_TERNARY, TERNARY_REDUCTION,
                      THEOREM_2_5_MINUS_1, THEOREM_2_5_MINUS_2,
                      THEOREM_3_4_MINUS_1, THEOREM_3_4_MINUS_2,
                      binary_weight2_highrate_code, build_paper_code,
                      build_parity_family, paper_code_params, t_code_table)
from .search import (GOAL_FIND_ONE, GOAL_PROVE_EMPTY, KIND_EMPTY,
                     KIND_INCONCLUSIVE, KIND_WITNESS, ReductionPlan,
                     apply_main_reduction, make_search_spec, search_multiset)
from .simplex import MultiplicityVector, build_multiset_code, extend_lcd

EV_WITNESS = "witness"
EV_BOUND = "bound"
EV_SEARCH = "search-certificate"
EV_CITED = "cited-external"
EV_INCONCLUSIVE = "inconclusive"

TABLE_NAMES = ("g2-5", "g3-4", "r2-5", "r3-4", "t-codes", "fig-matrices",
               "d3-small", "d2-n5-highrate", "d3-highrate",
               "theorem-2-5-desk", "theorem-3-4-desk")


@dataclass(frozen=True)
class TableEntry:
    cell: str
    claimed: str
    computed: str
    evidence: str
    passed: bool | None
    note: str = ""

    def status(self) -> str:
        if self.passed is True:
            return "pass"
        if self.passed is False:
            return "FAIL"
        return "open"


@dataclass(frozen=True)
class TableReport:
    name: str
    entries: tuple[TableEntry, ...]

    @property
    def n_pass(self) -> int:
        return sum(1 for e in self.entries if e.passed is True)

    @property
    def n_fail(self) -> int:
        return sum(1 for e in self.entries if e.passed is False)

    @property
    def n_open(self) -> int:
        return sum(1 for e in self.entries if e.passed is None)

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    def format_text(self) -> str:
        lines = [f"table {self.name}: {self.n_pass} pass, {self.n_fail} fail, "
                 f"{self.n_open} open"]
        for e in sorted(self.entries, key=lambda e: e.cell):
            line = (f"  {e.cell:<18} {e.status():<4} claimed={e.claimed} "
                    f"computed={e.computed} evidence={e.evidence}")
            if e.note:
                line += f" note={e.note}"
            lines.append(line)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"table": self.name,
                "summary": {"pass": self.n_pass, "fail": self.n_fail,
                            "open": self.n_open},
                "cells": [{"cell": e.cell, "claimed": e.claimed,
                           "computed": e.computed, "evidence": e.evidence,
                           "status": e.status(), "note": e.note}
                          for e in sorted(self.entries, key=lambda e: e.cell)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# ---------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------

def _find_one(q, n, k, d, budget):
    spec = make_search_spec(q, k, n, d, goal=GOAL_FIND_ONE)
    return search_multiset(spec, budget)


def _prove_empty(q, n, k, d, budget):
    spec = make_search_spec(q, k, n, d, goal=GOAL_PROVE_EMPTY)
    return search_multiset(spec, budget)


def k1_max_weight(q: int, n: int) -> int:
    """Largest d of an LCD [n,1] code: the longest support size whose
    weight is nonzero mod q (column scalings square to 1, so the Gram of a
    weight-w generator is w mod q; every [n,1,w] code is equivalent to the
    1^w 0^(n-w) generator)."""
    for w in range(n, 0, -1):
        gen = np.zeros((1, n), dtype=np.uint8)
        gen[0, :w] = 1
        c = LinearCode(FqMatrix(q, gen))
        if codes.is_lcd(c):
            if codes.min_weight(c) != w:
                raise AssertionError("k=1 helper produced a wrong weight")
            return w
    raise AssertionError(f"no LCD [n,1] code found for n={n}")


def _verify_stored(code_id: str) -> tuple[bool, str]:
    """Build a stored code and check its stated parameters exactly."""
    q, n, k, d = paper_code_params(code_id)
    c = build_paper_code(code_id)
    got = [c.q == q, c.n == n, c.k == k, codes.is_lcd(c)]
    if d <= 4 and q ** k > codes.DEFAULT_ENUM_BUDGET:
        got.append(not codes.min_weight_at_most(c, d - 1) if d > 1 else True)
        got.append(codes.min_weight_at_most(c, d))
        dtxt = str(d) if all(got) else "?"
    else:
        dm = codes.min_weight(c)
        got.append(dm == d)
        dtxt = str(dm)
    return all(got), f"[{c.n},{c.k},{dtxt}]q={c.q} lcd={codes.is_lcd(c)}"


# ---------------------------------------------------------------
# the individual tables
# ---------------------------------------------------------------

def _table_g(q: int) -> TableReport:
    coeff, period, k, step = ((G2_COEFF, 31, 5, 16) if q == 2
                              else (G3_COEFF, 40, 4, 27))
    entries = []
    for s in range(4):
        for t in range(period):
            n = period * s + t
            claimed = step * s + coeff[t]
            got = griesmer_g(q, n, k)
            entries.append(TableEntry(f"s{s}t{t:02d}", str(claimed), str(got),
                                      EV_BOUND, got == claimed))
    return TableReport(f"g{q}-{k}", tuple(entries))


def _table_r(q: int) -> TableReport:
    table, period, k, step = ((BINARY_REDUCTION, 31, 5, 16) if q == 2
                              else (TERNARY_REDUCTION, 40, 4, 27))
    entries = []
    for t, (alpha, r) in sorted(table.items()):
        got = search.reduction_r(q, k, t, alpha)
        # the s terms must cancel: recompute with explicit s
        s_ok = all(q ** (k - 1) * (period * s + t) - period * (step * s + alpha) == got
                   for s in range(6))
        sp = search.reduction_s_prime(q, k, t, got)
        sp_ok = (q * got - t) % period == 0 and sp >= 1
        ok = got == r and s_ok and sp_ok
        entries.append(TableEntry(f"t{t:02d}", str(r), str(got), EV_BOUND, ok,
                                  note=f"s'={sp}"))
    return TableReport(f"r{q}-{k}", tuple(entries))


def _table_t_codes(budget) -> TableReport:
    entries = []
    for n, (d, _m) in sorted(t_code_table().items()):
        ok, desc = _verify_stored(f"T{n}")
        c = build_paper_code(f"T{n}")
        dd_ok = codes.dual_distance_at_least_2(c)
        entries.append(TableEntry(f"T{n}", f"[{n},4,{d}]", desc, EV_WITNESS,
                                  ok and dd_ok))
    return TableReport("t-codes", tuple(entries))


def _table_fig(budget) -> TableReport:
    entries = []
    ids = [f"M{n}-{k}-{d}" for n, k, d in FIG_CODE_PARAMS]
    ids += ["H25", "H26"]
    ids += [f"M36-chain-{i}" for i in range(7, 33)]
    for cid in ids:
        q, n, k, d = paper_code_params(cid)
        ok, desc = _verify_stored(cid)
        entries.append(TableEntry(cid, f"[{n},{k},{d}]q={q}", desc, EV_WITNESS, ok))
    return TableReport("fig-matrices", tuple(entries))


def _zero_column_closed(q: int, n: int, k: int, dd: int) -> bool:
    """No LCD [n,k,dd] code can have an identically zero coordinate when
    no LCD [n-1,k,dd] code exists; the bound rules certify that."""
    return n - 1 < k or lcd_upper_bound(q, n - 1, k).lcd_upper < dd


def _table_d3_small(budget) -> TableReport:
    entries = []
    tcodes = t_code_table()
    for n in sorted(D3_SMALL):
        for k, val in sorted(D3_SMALL[n].items()):
            cell = f"n{n:02d}k{k:02d}"
            if isinstance(val, tuple):
                ub = lcd_upper_bound(3, n, k).lcd_upper
                entries.append(TableEntry(
                    cell, f"{val[0]}..{val[1]}", f"upper<= {ub}", EV_CITED, None,
                    note="open range, unresolved; bound consistent"
                         if val[1] <= ub else "open range; BOUND INCONSISTENT"))
                continue
            if k == 4:
                wit = _find_one(3, n, 4, val, budget)
                emp = _prove_empty(3, n, 4, val + 1, budget)
                closed = _zero_column_closed(3, n, 4, val + 1)
                ok = (wit.kind == KIND_WITNESS and emp.kind == KIND_EMPTY
                      and closed)
                note = "witness+empty pair"
                if n in tcodes and tcodes[n][0] == val:
                    note += "; matches stored code"
                entries.append(TableEntry(
                    cell, str(val),
                    f"wit={wit.kind} empty@{val + 1}={emp.kind}",
                    EV_SEARCH,
                    ok if emp.kind != KIND_INCONCLUSIVE else None, note))
                continue
            have_wit = (n, k, val) in FIG_CODE_PARAMS
            wit_ok = None
            if have_wit:
                wit_ok, _ = _verify_stored(f"M{n}-{k}-{val}")
            ub = lcd_upper_bound(3, n, k).lcd_upper
            bound_closed = ub == val
            if val > ub:
                entries.append(TableEntry(cell, str(val), f"upper={ub}",
                                          EV_BOUND, False,
                                          note="claim exceeds the bound"))
                continue
            if have_wit and bound_closed:
                entries.append(TableEntry(cell, str(val),
                                          f"witness ok, upper={ub}",
                                          EV_WITNESS, bool(wit_ok),
                                          note="existence stored, maximality by bound"))
            elif have_wit:
                entries.append(TableEntry(cell, str(val),
                                          f"witness ok, upper={ub}",
                                          EV_WITNESS,
                                          None if wit_ok else False,
                                          note="maximality quoted (AH-C/Sok/Br)"))
            elif bound_closed:
                entries.append(TableEntry(cell, str(val), f"upper={ub}",
                                          EV_BOUND, None,
                                          note="existence quoted (LCD3.txt/Sok)"))
            else:
                entries.append(TableEntry(cell, str(val), f"upper={ub}",
                                          EV_CITED, None,
                                          note="both sides quoted"))
    return TableReport("d3-small", tuple(entries))


def _d2_n5_value(n: int) -> int:
    if n == 6:
        return 5
    if n in (7, 9, 11):
        return 4
    if n in (8, 10) or 12 <= n <= 26:
        return 3
    return 2


def _table_d2_n5(budget) -> TableReport:
    entries = []
    for n in range(6, 35):
        k = n - 5
        val = _d2_n5_value(n)
        cell = f"n{n:02d}"
        note_parts = []
        ok = True
        if n == 6:
            got = k1_max_weight(2, 6)
            entries.append(TableEntry(cell, "5", str(got), EV_BOUND, got == 5,
                                      note="one-dimensional, direct"))
            continue
        if n in (7, 9, 11):
            wit = method1.run_method1(2, n, k, 4, goal=GOAL_FIND_ONE, budget=budget)
            g = griesmer_g(2, n, k)
            ok = wit.kind == KIND_WITNESS and g == 4
            entries.append(TableEntry(cell, "4",
                                      f"wit={wit.kind} griesmer={g}",
                                      EV_SEARCH, ok,
                                      note="maximality by length bound"))
            continue
        if val == 3:
            if n in (25, 26):
                wit_ok, _ = _verify_stored("H25" if n == 25 else "H26")
                wtxt = "stored-witness" if wit_ok else "stored-witness-FAIL"
                note_parts.append("witness stored")
            else:
                wit = highrate_column_search(2, n, 5, goal=GOAL_FIND_ONE,
                                             budget=budget)
                wit_ok = wit.kind == KIND_WITNESS
                wtxt = f"wit={wit.kind}"
            emp = method1.run_method1(2, n, k, 4, goal=GOAL_PROVE_EMPTY,
                                      budget=budget)
            ok = bool(wit_ok) and emp.kind == KIND_EMPTY
            note_parts.append("no weight-4 matrix in normal form"
                              if k > 16 else "weight-4 search empty")
            entries.append(TableEntry(cell, "3", f"{wtxt} empty@4={emp.kind}",
                                      EV_SEARCH, ok, note="; ".join(note_parts)))
            continue
        # val == 2, n >= 27
        wit_c = binary_weight2_highrate_code(n, 5)
        wit_ok = wit_c.n == n and wit_c.k == k
        if n <= 31:
            emp = highrate_column_search(2, n, 5, goal=GOAL_PROVE_EMPTY,
                                         budget=budget)
            etxt = f"empty@3={emp.kind}"
            ok = wit_ok and emp.kind == KIND_EMPTY
            note = "distance-3 exhausted; claim concerns LCD codes only"
        else:
            cap = sphere_packing_max_n(2, 5)
            etxt = f"cap={cap}"
            ok = wit_ok and n > cap
            note = "no distance-3 code of any kind at this length"
        entries.append(TableEntry(cell, "2", f"wit-2=ok {etxt}", EV_SEARCH, ok,
                                  note=note))
    return TableReport("d2-n5-highrate", tuple(entries))


def _d3_highrate_value(i: int, n: int) -> int:
    if i == 2:
        return 2
    if i == 3:
        if n == 4:
            return 4
        return 3 if n <= 10 else 2
    if n == 5:
        return 5
    if n <= 8:
        return 4
    return 3 if n <= 36 else 2


def _table_d3_highrate(budget) -> TableReport:
    entries = []
    # redundancy 2: value 2 for every n >= 3
    for n in range(3, 9):
        cell = f"i2n{n:02d}"
        wit = build_parity_family(n, 2)
        wit_ok = wit.n == n and wit.k == n - 2
        if n == 3:
            got = k1_max_weight(3, 3)
            entries.append(TableEntry(cell, "2", str(got), EV_BOUND,
                                      wit_ok and got == 2,
                                      note="one-dimensional, direct"))
        elif n == 4:
            emp = _prove_empty(3, 4, 2, 3, budget)
            ok = wit_ok and emp.kind == KIND_EMPTY and _zero_column_closed(3, 4, 2, 3)
            entries.append(TableEntry(cell, "2", f"empty@3={emp.kind}",
                                      EV_SEARCH, ok))
        else:
            cap = sphere_packing_max_n(3, 2)
            entries.append(TableEntry(cell, "2", f"cap={cap}", EV_BOUND,
                                      wit_ok and n > cap,
                                      note="holds for every larger length too"))
    # redundancy 3
    for n in range(4, 17):
        cell = f"i3n{n:02d}"
        val = _d3_highrate_value(3, n)
        if n == 4:
            got = k1_max_weight(3, 4)
            entries.append(TableEntry(cell, "4", str(got), EV_BOUND, got == 4,
                                      note="one-dimensional, direct"))
            continue
        if val == 3:
            wit = highrate_column_search(3, n, 3, goal=GOAL_FIND_ONE, budget=budget)
            if n == 5:
                emp = _prove_empty(3, 5, 2, 4, budget)
                eok = emp.kind == KIND_EMPTY and _zero_column_closed(3, 5, 2, 4)
                etxt = f"empty@4={emp.kind}"
            elif n == 6:
                emp = _prove_empty(3, 6, 3, 4, budget)
                eok = emp.kind == KIND_EMPTY and _zero_column_closed(3, 6, 3, 4)
                etxt = f"empty@4={emp.kind}"
            else:
                g = griesmer_g(3, n, n - 3)
                eok = g < 4
                etxt = f"griesmer={g}"
            ok = wit.kind == KIND_WITNESS and eok
            entries.append(TableEntry(cell, "3", f"wit={wit.kind} {etxt}",
                                      EV_SEARCH, ok))
            continue
        wit = build_parity_family(n, 3)
        wit_ok = wit.n == n and wit.k == n - 3
        if n <= 13:
            emp = highrate_column_search(3, n, 3, goal=GOAL_PROVE_EMPTY,
                                         budget=budget)
            ok = wit_ok and emp.kind == KIND_EMPTY
            entries.append(TableEntry(cell, "2", f"wit-2=ok empty@3={emp.kind}",
                                      EV_SEARCH, ok,
                                      note="distance 3 impossible only for LCD"))
        else:
            cap = sphere_packing_max_n(3, 3)
            entries.append(TableEntry(cell, "2", f"cap={cap}", EV_BOUND,
                                      wit_ok and n > cap))
    # redundancy 4
    for n in range(5, 43):
        cell = f"i4n{n:02d}"
        val = _d3_highrate_value(4, n)
        if n == 5:
            got = k1_max_weight(3, 5)
            entries.append(TableEntry(cell, "5", str(got), EV_BOUND, got == 5,
                                      note="one-dimensional, direct"))
            continue
        if val == 4:
            wit = _find_one(3, n, n - 4, 4, budget)
            emp = _prove_empty(3, n, n - 4, 5, budget)
            closed = _zero_column_closed(3, n, n - 4, 5)
            ok = wit.kind == KIND_WITNESS and emp.kind == KIND_EMPTY and closed
            entries.append(TableEntry(cell, "4",
                                      f"wit={wit.kind} empty@5={emp.kind}",
                                      EV_SEARCH, ok))
            continue
        if val == 3:
            if 11 <= n <= 36:
                wit_ok, desc = _verify_stored(f"M36-chain-{n - 4}")
                entries.append(TableEntry(cell, "3", desc, EV_WITNESS,
                                          None if wit_ok else False,
                                          note="maximality quoted (Br)"))
            else:
                wit = highrate_column_search(3, n, 4, goal=GOAL_FIND_ONE,
                                             budget=budget)
                emp = method1.run_method1(3, n, n - 4, 4,
                                          goal=GOAL_PROVE_EMPTY, budget=budget)
                ok = wit.kind == KIND_WITNESS and emp.kind == KIND_EMPTY
                entries.append(TableEntry(cell, "3",
                                          f"wit={wit.kind} empty@4={emp.kind}",
                                          EV_SEARCH, ok))
            continue
        wit = build_parity_family(n, 4)
        wit_ok = wit.n == n and wit.k == n - 4
        if n <= 40:
            emp = highrate_column_search(3, n, 4, goal=GOAL_PROVE_EMPTY,
                                         budget=budget)
            ok = wit_ok and emp.kind == KIND_EMPTY
            entries.append(TableEntry(cell, "2", f"wit-2=ok empty@3={emp.kind}",
                                      EV_SEARCH, ok,
                                      note="distance 3 impossible only for LCD"))
        else:
            cap = sphere_packing_max_n(3, 4)
            entries.append(TableEntry(cell, "2", f"cap={cap}", EV_BOUND,
                                      wit_ok and n > cap))
    return TableReport("d3-highrate", tuple(entries))


def _thm_value(q: int, t: int, s: int) -> int:
    if q == 2:
        off = 1 if t in THEOREM_2_5_MINUS_1 else 2
        return (16 * (31 * s + t)) // 31 - off
    off = 1 if t in THEOREM_3_4_MINUS_1 else 2
    return (27 * (40 * s + t)) // 40 - off


def _table_theorem_desk(q: int, budget) -> TableReport:
    period, k, step = (31, 5, 16) if q == 2 else (40, 4, 27)
    red = BINARY_REDUCTION if q == 2 else TERNARY_REDUCTION
    gb = set(GB_RESIDUES_BINARY if q == 2 else GB_RESIDUES_TERNARY)
    coeff = G2_COEFF if q == 2 else G3_COEFF
    residues = sorted((THEOREM_2_5_MINUS_1 | THEOREM_2_5_MINUS_2) if q == 2
                      else (THEOREM_3_4_MINUS_1 | THEOREM_3_4_MINUS_2))
    desk_t = 30 if q == 2 else 39
    entries = []

    # parity-rule sweep: upper bound is g-1 exactly on the listed residues
    for t in range(period):
        results = []
        for s in range(3):
            n = period * s + t
            if n < k:
                continue
            v = lcd_upper_bound(q, n, k)
            want = v.g - 1 if t in gb else v.g
            results.append(v.lcd_upper == want)
        entries.append(TableEntry(f"gb-t{t:02d}",
                                  "g-1" if t in gb else "g",
                                  "match" if all(results) else "mismatch",
                                  EV_BOUND, bool(results) and all(results),
                                  note="" if results else "all lengths below k"))

    # per-residue upper bounds for the final theorem
    for t in residues:
        c0 = _thm_value(q, t, 0)
        claimed = f"{step}s{c0:+d}"
        formula_ok = all(_thm_value(q, t, s) == step * s + c0 for s in range(3))
        if t in red:
            alpha, r = red[t]
            consistent = all(_thm_value(q, t, s) == step * s + alpha - 1
                             for s in range(3))
            if t == desk_t:
                cert = apply_main_reduction(ReductionPlan(q, k, t, alpha), budget)
                ok = consistent and formula_ok and cert.kind == KIND_EMPTY
                entries.append(TableEntry(f"t{t:02d}-upper", claimed,
                                          f"reduction r={r}: {cert.kind}",
                                          EV_SEARCH, ok))
            else:
                entries.append(TableEntry(f"t{t:02d}-upper", claimed,
                                          f"reduction r={r}: consistent="
                                          f"{consistent}",
                                          EV_CITED,
                                          None if consistent and formula_ok
                                          else False,
                                          note="reduced search beyond desk scale"))
        else:
            gb_val_ok = (t in gb and formula_ok and
                         all(_thm_value(q, t, s) == step * s + coeff[t] - 1
                             for s in range(3)))
            entries.append(TableEntry(f"t{t:02d}-upper", claimed,
                                      f"parity rule gives g-1={coeff[t] - 1}"
                                      if t in gb else "no local upper source",
                                      EV_BOUND if t in gb else EV_CITED,
                                      True if gb_val_ok else
                                      (None if t not in gb else False)))

    # per-residue witnesses at the smallest in-range length
    tcodes = t_code_table() if q == 3 else {}
    for t in residues:
        s0 = 0 if period * 0 + t >= k and _thm_value(q, t, 0) >= 1 else 1
        n0 = period * s0 + t
        v0 = _thm_value(q, t, s0)
        cell = f"t{t:02d}-witness"
        if q == 3 and n0 in tcodes and tcodes[n0][0] == v0:
            ok, desc = _verify_stored(f"T{n0}")
            entries.append(TableEntry(cell, f"[{n0},{k},{v0}]", desc,
                                      EV_WITNESS, ok, note="stored code"))
        else:
            cert = _find_one(q, n0, k, v0, budget)
            entries.append(TableEntry(cell, f"[{n0},{k},{v0}]",
                                      f"wit={cert.kind}", EV_SEARCH,
                                      cert.kind == KIND_WITNESS))

    # the full desk-scale pipeline at s = 1
    t = desk_t
    s1_n = period + t
    s1_d = _thm_value(q, t, 1)
    if q == 2:
        base = _find_one(2, 30, 5, 14, budget)
        ok_base = base.kind == KIND_WITNESS
        if ok_base:
            mv = MultiplicityVector(2, 5, tuple(
                int(x) for x in base.witnesses[0]["m"]))
            big = extend_lcd(build_multiset_code(mv), 1)
            ok_ext = big.n == s1_n and codes.min_weight(big) == s1_d
        else:
            ok_ext = False
    else:
        base_c = build_paper_code("T39")
        ok_base = codes.min_weight(base_c) == 25 and codes.is_lcd(base_c)
        big = extend_lcd(base_c, 1)
        ok_ext = big.n == s1_n and codes.min_weight(big) == s1_d
    alpha, r = red[t]
    cert = apply_main_reduction(ReductionPlan(q, k, t, alpha), budget)
    ok = ok_base and ok_ext and cert.kind == KIND_EMPTY
    entries.append(TableEntry(f"t{t:02d}-pipeline",
                              f"d={s1_d} at n={s1_n}",
                              f"witness+family-empty: base={ok_base} "
                              f"extended={ok_ext} cert={cert.kind}",
                              EV_SEARCH, ok,
                              note="witness meets the family nonexistence bound"))
    name = "theorem-2-5-desk" if q == 2 else "theorem-3-4-desk"
    return TableReport(name, tuple(entries))


def verify_table(name: str, budget: int | None = None) -> TableReport:
    if budget is None:
        budget = search.default_budget()
    if name == "g2-5":
        return _table_g(2)
    if name == "g3-4":
        return _table_g(3)
    if name == "r2-5":
        return _table_r(2)
    if name == "r3-4":
        return _table_r(3)
    if name == "t-codes":
        return _table_t_codes(budget)
    if name == "fig-matrices":
        return _table_fig(budget)
    if name == "d3-small":
        return _table_d3_small(budget)
    if name == "d2-n5-highrate":
        return _table_d2_n5(budget)
    if name == "d3-highrate":
        return _table_d3_highrate(budget)
    if name == "theorem-2-5-desk":
        return _table_theorem_desk(2, budget)
    if name == "theorem-3-4-desk":
        return _table_theorem_desk(3, budget)
    raise KeyError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")
