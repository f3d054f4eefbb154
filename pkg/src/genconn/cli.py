"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage, parse or
budget errors. Graphs are read as graph6 lines from stdin or ``--file``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Sequence

from . import __version__
from .ears import find_cycle_with_ears, kappa3_equals_one, kappa4_equals_one
from .extremal import MAX_ORACLE_ORDER, MAX_STRUCTURAL_ORDER, ORACLE, STRUCTURAL, compute_f
from .families import CLASSES, catalog_report, generate_class, is_member, k5_counterexample
from .generate import MAX_ENUM_ORDER, enumerate_connected, enumerate_graphs
from .graph import BudgetExceeded, Graph, is_connected
from .graph6 import Graph6Error, decode, encode
from .packing import kappa_n_equals_one
from .steiner import (
    MAX_STEINER_ORDER,
    find_packing,
    generalized_k_connectivity,
    kappa_bar_at_least,
    max_generalized_local_connectivity,
    steiner_local_connectivity,
    terminal_sets,
)
from .verify import THEOREM_IDS, verify_theorem


class UsageError(Exception):
    pass


def _read_graphs(args) -> list[Graph]:
    if args.file:
        with open(args.file) as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    graphs = [decode(line) for line in lines if line.strip()]
    if not graphs:
        raise UsageError("no graphs on input")
    return graphs


def _emit_json(command: str, results: list, out) -> None:
    json.dump({"command": command, "version": __version__, "results": results}, out,
              indent=2, sort_keys=True)
    out.write("\n")


def _parse_k(value: str, n: int) -> int:
    return n if value == "n" else int(value)


def cmd_kappa(args, out) -> int:
    results = []
    for g in _read_graphs(args):
        if not is_connected(g):
            raise UsageError(f"{encode(g)} is not connected")
        k = _parse_k(args.k, g.n)
        row = {"graph6": encode(g), "n": g.n, "k": k}
        if args.terminals:
            s = [int(x) for x in args.terminals.split(",")]
            value, packing = steiner_local_connectivity(g, s, args.max_n, with_witness=True)
            row.update(terminals=list(packing.terminals), kappa=value,
                       trees=[[list(e) for e in tr] for tr in packing.trees])
            text = str(value)
        else:
            value, s = max_generalized_local_connectivity(g, k, args.max_n, with_witness=True)
            row.update(kappa_bar=value, witness=list(s) if s else None)
            text = str(value)
            if args.min:
                low = generalized_k_connectivity(g, k, args.max_n)
                row["kappa_min"] = low
                text += f" {low}"
        results.append(row)
        if not args.json:
            out.write(text + "\n")
    if args.json:
        _emit_json("kappa", results, out)
    return 0


def cmd_classify(args, out) -> int:
    results = []
    for g in _read_graphs(args):
        if not is_connected(g):
            raise UsageError(f"{encode(g)} is not connected")
        row = {
            "graph6": encode(g),
            "kappa3_is_one": kappa3_equals_one(g),
            "kappa4_is_one": kappa4_equals_one(g),
            "kappan_is_one": kappa_n_equals_one(g) if g.n >= 2 else True,
        }
        if args.ears:
            found = find_cycle_with_ears(g, args.ears)
            row["cycle_with_ears"] = None if found is None else {
                "cycle": list(found[0]),
                "ears": [list(e.path) for e in found[1]],
            }
        if args.oracle:
            row["oracle_kappa3_is_one"] = g.n < 3 or kappa_bar_at_least(g, 3, 2, args.max_n) is None
            row["oracle_kappa4_is_one"] = g.n < 4 or kappa_bar_at_least(g, 4, 2, args.max_n) is None
        results.append(row)
        if not args.json:
            flags = " ".join(f"{key}={int(val)}" for key, val in row.items()
                             if isinstance(val, bool))
            out.write(f"{row['graph6']} {flags}\n")
    if args.json:
        _emit_json("classify", results, out)
    return 0


def cmd_f(args, out) -> int:
    reports = []
    ks = [args.k] if args.k else ["3", "4", "n"]
    for n in range(args.n, (args.n_max or args.n) + 1):
        for k in sorted({_parse_k(kk, n) for kk in ks}):
            if k > n:
                continue
            rep = compute_f(n, k, args.method, args.workers, args.oracle_max, args.structural_max)
            reports.append(rep)
    rows = []
    for rep in reports:
        d = rep.to_dict()
        if not args.timing:
            d.pop("elapsed")
        rows.append(d)
    if args.json:
        _emit_json("f", rows, out)
    elif args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "k", "f", "count", "method"])
        for rep in reports:
            writer.writerow([rep.n, rep.k, rep.f_value, len(rep.extremal_graphs), rep.method])
    else:
        out.write(f"{'n':>3} {'k':>3} {'f':>4} {'count':>6} {'family':>7} {'method':>10}\n")
        for rep in reports:
            fam = "-" if rep.family is None else (
                rep.family + ("" if all(rep.family_verdict.values()) else "!"))
            note = " (empirical, no closed form)" if rep.conjecture else ""
            out.write(f"{rep.n:>3} {rep.k:>3} {rep.f_value:>4} {len(rep.extremal_graphs):>6} "
                      f"{fam:>7} {rep.method:>10}{note}\n")
            if args.graphs:
                for code in rep.extremal_graphs:
                    out.write(f"    {code}\n")
    return 0


def cmd_families(args, out) -> int:
    if args.member:
        results = []
        for g in _read_graphs(args):
            ok = is_member(args.cls, args.q, g)
            results.append({"graph6": encode(g), "class": args.cls, "member": ok})
            if not args.json:
                out.write(f"{encode(g)} {int(ok)}\n")
        if args.json:
            _emit_json("families", results, out)
        return 0
    if args.n is None:
        raise UsageError("families needs --n unless --member is given")
    members = generate_class(args.cls, args.n)
    if args.json:
        _emit_json("families", [{"class": args.cls, "n": args.n,
                                 "members": [encode(g) for g in members]}], out)
    else:
        for g in members:
            out.write(encode(g) + "\n")
    return 0


def cmd_blocks(args, out) -> int:
    rows = catalog_report()
    if args.json:
        _emit_json("blocks", rows, out)
    else:
        for r in rows:
            out.write(f"{r['name']:<3} order={r['order']} size={r['size']} {r['graph6']}\n")
    return 0


def cmd_enumerate(args, out) -> int:
    gen = enumerate_graphs if args.all else enumerate_connected
    codes = [encode(g) for g in gen(args.n, args.min_edges, args.max_edges, args.max_n)]
    if args.json:
        _emit_json("enumerate", [{"n": args.n, "count": len(codes), "graphs": codes}], out)
    elif args.count:
        out.write(f"{len(codes)}\n")
    else:
        for c in codes:
            out.write(c + "\n")
    return 0


def cmd_counterexample(args, out) -> int:
    g = k5_counterexample()
    row = {"graph6": encode(g), "n": g.n, "m": g.m}
    ok = True
    if args.check:
        multi = [s for s in terminal_sets(g.n, 5) if find_packing(g, s, 2) is not None]
        four = kappa_bar_at_least(g, 4, 2)
        row.update(kappa5_is_one=not multi, kappa4_witness=list(four) if four else None,
                   two_ears=find_cycle_with_ears(g, 2) is not None)
        ok = not multi and four is not None and row["two_ears"]
    if args.json:
        _emit_json("counterexample", [row], out)
    else:
        out.write(row["graph6"] + "\n")
        if args.check:
            out.write(f"kappa5={1 if row['kappa5_is_one'] else 2}\n")
            out.write(f"kappa4>=2 at S={row['kappa4_witness']}\n")
    return 0 if ok else 1


def cmd_verify(args, out) -> int:
    ids = THEOREM_IDS if args.id == "all" else (args.id,)
    reports = []
    for rid in ids:
        params = {}
        if args.n_max is not None and rid in ("T3", "T4", "T-n", "P1", "P2", "NW", "L1"):
            params["n_max"] = args.n_max
        reports.append(verify_theorem(rid, **params))
    if args.json:
        _emit_json("verify", [r.to_dict() for r in reports], out)
    else:
        for r in reports:
            for c in r.checks:
                out.write(f"[{'PASS' if c.passed else 'FAIL'}] {r.id}: {c.name}"
                          + (f" ({c.detail})" if c.detail else "") + "\n")
            for code in r.counterexamples:
                out.write(f"  counterexample {code}\n")
        out.write("ALL PASS\n" if all(r.passed for r in reports) else "FAILED\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genconn",
        description="Generalized local connectivity: Steiner tree packing and extremal graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--file", help="graph6 file (default: stdin)")
        p.add_argument("--json", action="store_true")
        p.add_argument("--max-n", type=int, default=MAX_STEINER_ORDER,
                       help="order budget for the exhaustive Steiner search")

    p = sub.add_parser("kappa", help="maximal generalized local connectivity of input graphs")
    p.add_argument("--k", required=True, help="terminal count, or 'n' for all vertices")
    p.add_argument("--terminals", help="comma-separated terminal set; report kappa(S) only")
    p.add_argument("--min", action="store_true", help="also report the minimum over k-sets")
    graph_input(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("classify", help="structural classifiers for k = 3, 4, n")
    p.add_argument("--ears", type=int, default=0, help="also search a cycle with this many ears")
    p.add_argument("--oracle", action="store_true", help="cross-check with the Steiner oracle")
    graph_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("f", help="extremal size by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int, help="sweep orders n..n-max")
    p.add_argument("--k", help="terminal count or 'n' (default: 3, 4 and n)")
    p.add_argument("--method", choices=(ORACLE, STRUCTURAL), default=STRUCTURAL)
    p.add_argument("--oracle-max", type=int, default=MAX_ORACLE_ORDER)
    p.add_argument("--structural-max", type=int, default=MAX_STRUCTURAL_ORDER)
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $GENCONN_WORKERS or the CPU count)")
    p.add_argument("--graphs", action="store_true", help="list extremal graphs")
    p.add_argument("--timing", action="store_true", help="include elapsed time in JSON")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_f)

    p = sub.add_parser("families", help="generate class members or test membership")
    p.add_argument("cls", choices=CLASSES)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int, help="residue to test membership against")
    p.add_argument("--member", action="store_true", help="test input graphs for membership")
    p.add_argument("--file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("blocks", help="dump the block catalog")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("enumerate", help="isomorph-free graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-edges", type=int, default=0)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.add_argument("--count", action="store_true")
    p.add_argument("--max-n", type=int, default=MAX_ENUM_ORDER)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("counterexample", help="the 9-vertex graph with kappa5 = 1")
    p.add_argument("--check", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify", help="run a named verification, or 'all'")
    p.add_argument("id", choices=THEOREM_IDS + ("all",))
    p.add_argument("--n-max", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (Graph6Error, BudgetExceeded, UsageError, ValueError, KeyError, OSError) as exc:
        print(f"genconn: error: {exc}", file=sys.stderr)
        return 2


def main(argv: Iterable[str] | None = None) -> None:
    sys.exit(run(list(argv) if argv is not None else None))


if __name__ == "__main__":
    main()
