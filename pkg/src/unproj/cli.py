"""Command-line workbench: ``unproj <subcommand> ...``.

Exit status: 0 when everything requested passes, 1 on a failed check,
2 on usage, file or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import dsl
from .formats import CIIdeal, jerry_check, tom_check
from .groebner import (
    Ideal,
    buchberger,
    eliminate,
    ideals_equal,
    is_member,
    normal_form,
    parse_order,
    saturate,
)
from .pfaffian import sub_pfaffians_4of6
from .ring import RingError
from .scenarios import SCENARIOS, UnknownScenarioError, get_scenario, run_all
from .toric import MonomialMap, kernel_ideal, pullback
from .unprojection import BilinearError, BilinearPair, cramer_unproject

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MACHINE_FIELDS = ("scenario", "check", "status", "millis", "witness")


class UsageError(Exception):
    pass


def _load(path: str) -> tuple[str, dsl.Workspace]:
    p = Path(path)
    try:
        text = p.read_text()
    except FileNotFoundError:
        raise UsageError(f"{path}: file not found") from None
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return text, dsl.parse(text)
    except dsl.DslError as exc:
        raise UsageError(f"{path}:{exc.line}:{exc.col}: {exc.message}") from None


def _lookup(ws: dsl.Workspace, table: dict, name: str | None, kind: str, path: str):
    if name is None:
        if len(table) != 1:
            raise UsageError(f"{path}: name the {kind} ({', '.join(table) or 'none declared'})")
        return next(iter(table.values()))
    if name not in table:
        raise UsageError(f"{path}: no {kind} named {name!r}")
    return table[name]


def _split_ref(ref: str) -> tuple[str, str | None]:
    path, _, name = ref.partition("#")
    return path, name or None


def _expr(ws: dsl.Workspace, text: str):
    if text in ws.polys:
        return ws.polys[text]
    try:
        return dsl.parse_expression(text, ws.ring, ws.polys)
    except dsl.DslError as exc:
        raise UsageError(f"expression: column {exc.col}: {exc.message}") from None


def _vars(ws: dsl.Workspace, text: str) -> list[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    for v in names:
        if v not in ws.ring:
            raise UsageError(f"unknown variable {v!r}")
    return names


def _ints(text: str, count: int, flag: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag} expects integers") from None
    if len(vals) != count:
        raise UsageError(f"{flag} expects {count} value(s)")
    return vals


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def machine_records(reports) -> list[str]:
    lines = []
    for r in reports:
        for c in r.checks:
            lines.append("\t".join((r.scenario, _escape(c.name), c.status, str(c.millis), _escape(c.witness or ""))))
    return lines


# -- subcommands -----------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.all and args.scenario:
        raise UsageError("use either --all or --scenario")
    try:
        names = [get_scenario(n).name for n in args.scenario] if args.scenario else None
    except UnknownScenarioError as exc:
        raise UsageError(str(exc)) from None
    reports = run_all(names, jobs=args.jobs)
    if args.machine:
        for line in machine_records(reports):
            print(line, file=out)
    else:
        width = max((len(r.scenario) for r in reports), default=0)
        for r in reports:
            print(f"{r.scenario:<{width}}  {r.status}", file=out)
            for c in r.checks:
                if c.status != "PASS":
                    print(f"    {c.status} {c.name}: {c.witness or c.detail or ''}", file=out)
        counts = {s: sum(r.status == s for r in reports) for s in ("PASS", "FAIL", "ERROR")}
        print(f"{len(reports)} scenarios: {counts['PASS']} passed, {counts['FAIL']} failed, "
              f"{counts['ERROR']} errors", file=out)
    if args.report:
        Path(args.report).write_text("\n\n".join(r.render() for r in reports) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_pfaffian(args, out) -> int:
    _, ws = _load(args.input)
    m = _lookup(ws, ws.matrices, args.matrix, "matrix", args.input)
    if args.maximal:
        if m.size % 2 == 0:
            raise UsageError("maximal Pfaffians need an odd-sized matrix")
        for i, p in m.maximal_pfaffians():
            print(f"{i}: {p}", file=out)
    elif args.sub4of6:
        if m.size != 6:
            raise UsageError("--sub4of6 needs a 6x6 matrix")
        for q, p in sub_pfaffians_4of6(m):
            print(f"{','.join(map(str, q))}: {p}", file=out)
    elif args.delete is not None:
        if not 1 <= args.delete <= m.size:
            raise UsageError(f"--delete index out of range 1..{m.size}")
        print(m.delete([args.delete]).pfaffian(), file=out)
    else:
        if m.size % 2:
            raise UsageError("the Pfaffian of an odd-sized matrix is 0; use --maximal")
        print(m.pfaffian(), file=out)
    return EXIT_OK


def cmd_groebner(args, out) -> int:
    _, ws = _load(args.input)
    gens = _lookup(ws, ws.ideals, args.ideal, "ideal", args.input)
    try:
        order = parse_order(args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    G = buchberger(Ideal(ws.ring, gens), order)
    for g in G.basis:
        print(g, file=out)
    return EXIT_OK


def cmd_member(args, out) -> int:
    path, name = _split_ref(args.ideal)
    _, ws = _load(path)
    gens = _lookup(ws, ws.ideals, name, "ideal", path)
    p = _expr(ws, args.poly)
    ideal = Ideal(ws.ring, gens)
    if args.saturate:
        ideal = saturate(ideal, _expr(ws, args.saturate))
    if is_member(p, ideal):
        print("MEMBER", file=out)
        return EXIT_OK
    r = normal_form(p, buchberger(ideal))
    print(f"NOT MEMBER\tnormal form: {r}", file=out)
    return EXIT_FAIL


def cmd_equal(args, out) -> int:
    sides = []
    for ref in (args.left, args.right):
        path, name = _split_ref(ref)
        _, ws = _load(path)
        sides.append((ws, _lookup(ws, ws.ideals, name, "ideal", path)))
    (lws, left), (rws, right) = sides
    if lws.ring.names != rws.ring.names:
        raise UsageError("the two workspaces declare different rings")
    right = [p.to_ring(lws.ring) for p in right]
    if ideals_equal(Ideal(lws.ring, left), Ideal(lws.ring, right)):
        print("EQUAL", file=out)
        return EXIT_OK
    print("NOT EQUAL", file=out)
    return EXIT_FAIL


def cmd_eliminate(args, out) -> int:
    _, ws = _load(args.input)
    gens = _lookup(ws, ws.ideals, args.ideal, "ideal", args.input)
    drop = _vars(ws, args.vars)
    res = eliminate(Ideal(ws.ring, gens), drop)
    for g in res.generators:
        print(g, file=out)
    return EXIT_OK


def _format_result(res, out) -> int:
    for w in res.witnesses:
        print(f"  {w}", file=out)
    print("PASS" if res.passed else "FAIL", file=out)
    return EXIT_OK if res.passed else EXIT_FAIL


def _ci_arg(ws, text) -> CIIdeal:
    names = _vars(ws, text)
    if len(names) != 4:
        raise UsageError("--ci needs four variables")
    return CIIdeal(ws.ring, names)


def cmd_tom(args, out) -> int:
    _, ws = _load(args.input)
    m = _lookup(ws, ws.matrices, args.matrix, "matrix", args.input)
    if m.size != 5 or not 1 <= args.index <= 5:
        raise UsageError("tom needs a 5x5 matrix and an index in 1..5")
    return _format_result(tom_check(m, args.index, _ci_arg(ws, args.ci)), out)


def cmd_jerry(args, out) -> int:
    _, ws = _load(args.input)
    m = _lookup(ws, ws.matrices, args.matrix, "matrix", args.input)
    j, k = _ints(args.rows, 2, "--rows")
    if m.size != 5 or j == k or not all(1 <= v <= 5 for v in (j, k)):
        raise UsageError("jerry needs a 5x5 matrix and two different indices in 1..5")
    res = jerry_check(m, j, k, _ci_arg(ws, args.ci))
    print(f"pivot m{min(j, k)}{max(j, k)} = {m[j, k]} ({'a' if res.pivot_is_variable else 'not a'} generator)",
          file=out)
    return _format_result(res, out)


def cmd_unproject(args, out) -> int:
    _, ws = _load(args.input)
    xvars = _vars(ws, args.xvars)
    if len(xvars) != 3:
        raise UsageError("--xvars needs three variables")
    yvars = _vars(ws, args.yvars) if args.yvars else []
    if args.new not in ws.ring:
        raise UsageError(f"unprojection variable {args.new!r} is not in the ring")
    pair = BilinearPair(_expr(ws, args.m1), _expr(ws, args.m2), tuple(xvars), tuple(yvars))
    try:
        res = cramer_unproject(pair, args.new)
    except BilinearError as exc:
        print(f"not bilinear: {exc}", file=out)
        return EXIT_FAIL
    print("coefficient matrix:", file=out)
    for v, (c1, c2) in zip(xvars, res.cofactor_matrix):
        print(f"  {v}: [{c1}, {c2}]", file=out)
    print("equations:", file=out)
    for e in res.equations:
        print(f"  {e}", file=out)
    return EXIT_OK


def cmd_toric(args, out) -> int:
    _, ws = _load(args.input)
    vm = _lookup(ws, ws.varmaps, args.map, "varmap", args.input)
    m = MonomialMap.from_varmap(vm)
    if args.pullback is not None:
        p = _expr(ws, args.pullback).to_ring(m.target)
        print(pullback(p, m), file=out)
        return EXIT_OK
    for g in kernel_ideal(m).generators:
        print(g, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="unproj", description="Pfaffian and unprojection workbench.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification scenarios")
    p.add_argument("--all", action="store_true", help="run every scenario (the default)")
    p.add_argument("--scenario", action="append", default=[], metavar="NAME")
    p.add_argument("--report", metavar="PATH", help="write the full text report")
    p.add_argument("--machine", action="store_true", help="tab-separated records, one per check")
    p.add_argument("--jobs", type=int, default=None, metavar="N", help="parallel scenarios (default: CPUs)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pfaffian", help="Pfaffians of a skew matrix")
    p.add_argument("--input", required=True)
    p.add_argument("--matrix")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--maximal", action="store_true")
    g.add_argument("--sub4of6", action="store_true")
    g.add_argument("--delete", type=int, metavar="I")
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("groebner", help="reduced Groebner basis")
    p.add_argument("--input", required=True)
    p.add_argument("--ideal")
    p.add_argument("--order", default="wdegrevlex", help="degrevlex, lex, wdegrevlex or elim:v1,v2,...")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("member", help="ideal membership")
    p.add_argument("--ideal", required=True, metavar="FILE[#NAME]")
    p.add_argument("--poly", required=True, metavar="EXPR")
    p.add_argument("--saturate", metavar="EXPR", help="test membership in the saturation by EXPR")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("equal", help="ideal equality")
    p.add_argument("--left", required=True, metavar="FILE[#NAME]")
    p.add_argument("--right", required=True, metavar="FILE[#NAME]")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("eliminate", help="eliminate variables")
    p.add_argument("--input", required=True)
    p.add_argument("--ideal")
    p.add_argument("--vars", required=True)
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("tom", help="Tom_i condition")
    p.add_argument("--input", required=True)
    p.add_argument("--matrix")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--ci", required=True, metavar="v1,v2,v3,v4")
    p.set_defaults(func=cmd_tom)

    p = sub.add_parser("jerry", help="Jerry_jk condition")
    p.add_argument("--input", required=True)
    p.add_argument("--matrix")
    p.add_argument("--rows", required=True, metavar="J,K")
    p.add_argument("--ci", required=True, metavar="v1,v2,v3,v4")
    p.set_defaults(func=cmd_jerry)

    p = sub.add_parser("unproject", help="Cramer-rule unprojection of a bilinear pair")
    p.add_argument("--input", required=True)
    p.add_argument("--m1", required=True)
    p.add_argument("--m2", required=True)
    p.add_argument("--xvars", required=True)
    p.add_argument("--yvars")
    p.add_argument("--new", required=True)
    p.set_defaults(func=cmd_unproject)

    p = sub.add_parser("toric", help="monomial maps")
    p.add_argument("--input", required=True)
    p.add_argument("--map")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--kernel", action="store_true")
    g.add_argument("--pullback", metavar="EXPR")
    p.set_defaults(func=cmd_toric)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"unproj {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RingError, ValueError) as exc:
        print(f"unproj {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["MACHINE_FIELDS", "SCENARIOS", "build_parser", "machine_records", "main"]
