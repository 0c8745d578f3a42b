"""Command-line front end.

Subcommands: classify, enumerate, table1, construct, matroid, socle,
reg4pg.  Everything prints deterministically; exit code 2 flags a
consistency violation (theorem recognizer vs engine, or computed table
row vs published row), exit code 1 a usage problem.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import (parse_graph6, parse_adjacency_text, emit_graph6,
                     build_Fm, build_Hi, build_G1, build_G2, chain)
from .ideal import stanley_reisner_complex
from .betti import DEFAULT_PRIME, artinian_reduction_Fm, socle_degrees
from .classify import classify, consistency_check
from .matroid import is_matroid
from .enumeration import enumerate_connected
from .database import (table1_report, find_reg4_noncone_pg, write_jsonl,
                       write_csv_rows)
from .graphs import decompose


def _load_graph(args):
    if args.graph6:
        return parse_graph6(args.graph6)
    with open(args.file) as fh:
        return parse_adjacency_text(fh.read())


def cmd_classify(args):
    G = _load_graph(args)
    if args.check:
        report = consistency_check(G, args.char)
        if args.json:
            print(json.dumps(report, sort_keys=True))
        else:
            rec = report["record"]
            print(_record_line(rec))
            for name, status in sorted(report["checks"].items()):
                print(f"  {name}: {status}")
        return 2 if report["violations"] else 0
    rec = classify(G, args.char, engine=args.engine).to_dict()
    print(json.dumps(rec, sort_keys=True) if args.json else _record_line(rec))
    return 0


def _record_line(rec):
    flags = [k for k in ("CM", "level", "pseudo_gorenstein", "gorenstein")
             if rec[k]]
    return (f"{rec['graph6']}  n={rec['n']} dim={rec['dim']} "
            f"pd={rec['pd']} reg={rec['reg']} "
            f"{' '.join(flags) if flags else 'not-CM'} "
            f"[{rec['engine']}, char {rec['field_char']}]")


def cmd_enumerate(args):
    for G in enumerate_connected(args.n):
        if args.indecomposable and len(decompose(G)) != 1:
            continue
        print(emit_graph6(G))
    return 0


def cmd_table1(args):
    report = table1_report(args.max_n, p=args.char, fast=not args.full)
    header = f"{'n':>3} {'indec':>6} {'CM':>5} {'level':>6} {'pG':>5}   published"
    print(header)
    bad = False
    for n in sorted(report["rows"]):
        r = report["rows"][n]
        pub = (f"{r['published_CM']}/{r['published_level']}"
               f"/{r['published_pseudo_gorenstein']}")
        print(f"{n:>3} {r['indecomposable']:>6} {r['CM']:>5} "
              f"{r['level']:>6} {r['pseudo_gorenstein']:>5}   {pub}")
        if (r["CM"], r["level"], r["pseudo_gorenstein"]) != \
           (r["published_CM"], r["published_level"],
                r["published_pseudo_gorenstein"]):
            bad = True
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            for n in sorted(report["records"]):
                write_jsonl(report["records"][n], fh)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv_rows(report, fh)
    return 2 if bad else 0


def cmd_construct(args):
    fam = args.family
    params = args.params
    if fam == "fm":
        G = build_Fm(*params)
    elif fam == "hi":
        G = build_Hi(*params)
    elif fam == "g1":
        G = build_G1(*params)
    elif fam == "g2":
        G = build_G2(*params)
    elif fam == "chain":
        G = chain(params)
    else:
        raise ValueError(fam)
    print(emit_graph6(G))
    if args.edges:
        for e in G.edges():
            print(*e)
    return 0


def cmd_matroid(args):
    G = parse_graph6(args.graph6)
    flag, wit = is_matroid(stanley_reisner_complex(G), witness=True)
    if flag:
        print("matroid")
    else:
        F, Fp, i = wit
        print(f"not a matroid: F={{{','.join(F)}}} "
              f"F'={{{','.join(Fp)}}} fails at i={i}")
    return 0


def cmd_socle(args):
    A = artinian_reduction_Fm(args.m)
    degs = socle_degrees(A)
    print("socle degrees:", sorted(degs))
    return 0


def cmd_reg4pg(args):
    for word in find_reg4_noncone_pg(args.n, p=args.char):
        print(word)
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="bei",
        description="binomial edge ideal classification toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 word")
    src.add_argument("--file", help="adjacency list file")
    c.add_argument("--engine", choices=["auto", "exact", "monomial"],
                   default="auto")
    c.add_argument("--char", type=int, default=DEFAULT_PRIME)
    c.add_argument("--json", action="store_true")
    c.add_argument("--check", action="store_true",
                   help="run the theorem consistency report")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate", help="stream connected graph classes")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--indecomposable", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("table1", help="reproduce the enumeration table")
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--char", type=int, default=DEFAULT_PRIME)
    t.add_argument("--full", action="store_true",
                   help="also compute pd/reg of non-CM graphs")
    t.add_argument("--jsonl", help="write per-graph records here")
    t.add_argument("--csv", help="write the count rows here")
    t.set_defaults(func=cmd_table1)

    b = sub.add_parser("construct", help="emit a named family member")
    b.add_argument("--family", required=True,
                   choices=["fm", "hi", "g1", "g2", "chain"])
    b.add_argument("--params", type=int, nargs="+", required=True)
    b.add_argument("--edges", action="store_true")
    b.set_defaults(func=cmd_construct)

    m = sub.add_parser("matroid", help="exchange check on the complex")
    m.add_argument("--graph6", required=True)
    m.set_defaults(func=cmd_matroid)

    s = sub.add_parser("socle", help="socle degrees of the F_m reduction")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_socle)

    r = sub.add_parser("reg4pg",
                       help="pG classes with reg 4 and no universal vertex")
    r.add_argument("--n", type=int, default=7)
    r.add_argument("--char", type=int, default=DEFAULT_PRIME)
    r.set_defaults(func=cmd_reg4pg)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
