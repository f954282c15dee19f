"""Command line front end.

Searches print one JSON certificate per run; everything else prints the
plain-text formats used throughout (matrix format, key=value bound line,
one-line code summary).
"""

from __future__ import annotations

import argparse
import sys

from . import codes, gf, method1, refdata, search, verify
from .bounds import lcd_upper_bound
from .highrate import highrate_column_search
from .search import (GOAL_ENUMERATE, GOAL_FIND_ONE, GOAL_PROVE_EMPTY,
                     MODE_FREE, MODE_PAPER, ReductionPlan, apply_main_reduction,
                     make_search_spec, search_multiset)
from .simplex import (build_multiset_code, extend_lcd, format_multiplicities,
                      multiplicities_of, parse_multiplicities, simplex_matrix)

GOALS = {"one": GOAL_FIND_ONE, "all": GOAL_ENUMERATE, "empty": GOAL_PROVE_EMPTY}
MODES = {"paper": MODE_PAPER, "free": MODE_FREE}


def _code_line(c) -> str:
    d = codes.min_weight(c)
    if c.k == c.n:
        dperp = "0"
    else:
        dd = codes.dual(c)
        if c.q ** dd.k <= codes.DEFAULT_ENUM_BUDGET:
            dperp = str(codes.min_weight(dd))
        else:
            # dual too large to enumerate; the column probes still decide d <= 4
            hit = next((w for w in range(1, 5)
                        if codes.min_weight_at_most(dd, w)), None)
            dperp = str(hit) if hit is not None else ">4"
    lcd = "true" if codes.is_lcd(c) else "false"
    return f"{c.q} {c.n} {c.k} {d} {dperp} {lcd}"


def _emit_code(c, out: str | None) -> None:
    if out:
        codes.save_code(c, out)
    else:
        print(gf.format_matrix(c.gen), end="")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="lcdcodes",
                                description="LCD code toolkit over GF(2) and GF(3)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bound", help="Griesmer value and LCD upper bound")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--mod4", action="store_true",
                    help="also apply the optional binary mod-4 rule")

    sp = sub.add_parser("check", help="summarize a stored code file")
    sp.add_argument("file")

    sp = sub.add_parser("simplex", help="print a simplex generator matrix")
    sp.add_argument("q", type=int)
    sp.add_argument("k", type=int)

    sp = sub.add_parser("cm", help="build a code from column multiplicities")
    sp.add_argument("q", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--m", required=True,
                    help="digit string or comma-separated multiplicities")
    sp.add_argument("--matrix", action="store_true",
                    help="print the generator instead of the summary line")

    sp = sub.add_parser("extend", help="prepend simplex copies to an LCD code")
    sp.add_argument("file")
    sp.add_argument("s", type=int)
    sp.add_argument("-o", "--out")

    sp = sub.add_parser("shorten", help="shorten a code at one coordinate")
    sp.add_argument("file")
    sp.add_argument("coord", type=int)
    sp.add_argument("-o", "--out")

    sp = sub.add_parser("search-cm", help="multiplicity-vector search")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--mode", choices=sorted(MODES), default="paper")
    sp.add_argument("--goal", choices=sorted(GOALS), default="one")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--engine", choices=["auto", "python"], default="auto")

    sp = sub.add_parser("method1", help="systematic generator search")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--lcd-only", action="store_true", default=True)
    sp.add_argument("--all-codes", dest="lcd_only", action="store_false",
                    help="count matrices without the LCD filter")
    sp.add_argument("--goal", choices=sorted(GOALS), default="one")
    sp.add_argument("--budget", type=int, default=None)

    sp = sub.add_parser("highrate", help="parity-column search at distance 3")
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("i", type=int)
    sp.add_argument("--goal", choices=["one", "empty"], default="empty")
    sp.add_argument("--budget", type=int, default=None)

    sp = sub.add_parser("reduce", help="residue-family nonexistence driver")
    sp.add_argument("q", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("alpha", type=int)
    sp.add_argument("--budget", type=int, default=None)

    sp = sub.add_parser("verify-table", help="re-verify a bundled table")
    sp.add_argument("name", choices=sorted(verify.TABLE_NAMES))
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--budget", type=int, default=None)

    sp = sub.add_parser("paper-code", help="print a bundled code")
    sp.add_argument("id", help="code id, or 'list' for all ids")
    sp.add_argument("--matrix", action="store_true")

    args = p.parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, KeyError, OSError, codes.BudgetExceededError) as e:
        msg = e.args[0] if e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "bound":
        v = lcd_upper_bound(args.q, args.n, args.k, binary_mod4_rule=args.mod4)
        print(f"g={v.g} lcd_upper={v.lcd_upper} rule={v.rule_fired}")
        return 0

    if args.command == "check":
        print(_code_line(codes.load_code(args.file)))
        return 0

    if args.command == "simplex":
        print(gf.format_matrix(simplex_matrix(args.q, args.k)), end="")
        return 0

    if args.command == "cm":
        mv = parse_multiplicities(args.q, args.k, args.m)
        c = build_multiset_code(mv)
        if args.matrix:
            print(gf.format_matrix(c.gen), end="")
        print(_code_line(c))
        return 0

    if args.command == "extend":
        c = extend_lcd(codes.load_code(args.file), args.s)
        _emit_code(c, args.out)
        print(_code_line(c), file=sys.stderr)
        return 0

    if args.command == "shorten":
        c = codes.shorten(codes.load_code(args.file), args.coord)
        _emit_code(c, args.out)
        print(_code_line(c), file=sys.stderr)
        return 0

    if args.command == "search-cm":
        spec = make_search_spec(args.q, args.k, args.n, args.d,
                                mode=MODES[args.mode], goal=GOALS[args.goal])
        cert = search_multiset(spec, args.budget, engine=args.engine)
        print(cert.to_json())
        return 0

    if args.command == "method1":
        cert = method1.run_method1(args.q, args.n, args.k, args.d,
                                   lcd_only=args.lcd_only,
                                   goal=GOALS[args.goal], budget=args.budget)
        print(cert.to_json())
        return 0

    if args.command == "highrate":
        cert = highrate_column_search(args.q, args.n, args.i,
                                      goal=GOALS[args.goal], budget=args.budget)
        print(cert.to_json())
        return 0

    if args.command == "reduce":
        plan = ReductionPlan(args.q, args.k, args.t, args.alpha)
        cert = apply_main_reduction(plan, args.budget)
        print(cert.to_json())
        return 0

    if args.command == "verify-table":
        report = verify.verify_table(args.name, args.budget)
        print(report.to_json() if args.json else report.format_text())
        return 0 if report.ok else 1

    if args.command == "paper-code":
        if args.id.strip().lower() == "list":
            for cid in refdata.list_paper_code_ids():
                print(cid)
            return 0
        c = refdata.build_paper_code(args.id)
        q, n, k, d = refdata.paper_code_params(args.id)
        if args.matrix:
            print(gf.format_matrix(c.gen), end="")
        if c.q == 3 and c.k == 4:
            print(f"m={format_multiplicities(multiplicities_of(c))}")
        print(f"{q} {n} {k} {d}")
        return 0

    raise AssertionError("unhandled command")


if __name__ == "__main__":
    sys.exit(main())
