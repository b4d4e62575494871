"""Command-line front end: ``nestwork {count,enumerate,gf,map,patterns,verify}``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections, enumeration, patterns, series, verify
from .bijections import IntervalProfile
from .diagram import Diagram, to_blocks, dump_blocks

CLASSES = [c.value for c in enumeration.ClassId]


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_count(args: argparse.Namespace) -> int:
    if args.brute_force:
        value = enumeration.count_bruteforce(args.class_id, args.n, args.k)
    else:
        value = enumeration.count(args.class_id, args.n, args.k)
    print(value)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    members = enumeration.class_members(args.class_id, args.n, args.k)
    if args.format == "json":
        print(_dump([d.to_json() for d in members]))
        return 0
    for d in members:
        print(d.dumps())
    return 0


def cmd_gf(args: argparse.Namespace) -> int:
    build = {"P": series.gf_p, "Q": series.gf_q, "RT": series.gf_rt}[args.which]
    poly = build(args.order)
    print(_dump(list(poly.row_sums()) if args.y1 else poly.triangle()))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    obj = _read_json(args.input)
    name = args.bijection
    if name == "beta" and args.inverse:
        print(bijections.beta_inv(IntervalProfile.from_json(obj)).dumps())
        return 0
    d = Diagram.from_json(obj)
    if name == "beta":
        print(_dump(bijections.beta(d).to_json()))
        return 0
    fn = {
        ("alpha", False): bijections.alpha,
        ("alpha", True): bijections.alpha_inv,
        ("gamma", False): bijections.gamma,
        ("gamma", True): bijections.gamma_inv,
    }[name, args.inverse]
    print(fn(d).dumps())
    return 0


def cmd_patterns(args: argparse.Namespace) -> int:
    d = Diagram.from_json(_read_json(args.input))
    kinds = [patterns.parse_pattern(k) for k in args.kind] or list(patterns.PatternKind)
    report = {
        str(kind): [[list(a) for a in occ.arcs] for occ in patterns.occurrences(d, kind)]
        for kind in kinds
    }
    report["blocks"] = dump_blocks(to_blocks(d))
    print(_dump(report))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run(args.suite, args.max_n)
    for r in results:
        print(_dump(r.to_json()))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nestwork",
        description="Partitions and partial matchings avoiding neighbor patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count a class on [n], optionally with k arcs (blocks for S)")
    p.add_argument("--class", dest="class_id", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--brute-force", action="store_true", help="count by exhaustive enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list the members of a class")
    p.add_argument("--class", dest="class_id", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["jsonl", "json"], default="jsonl")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gf", help="coefficient triangle of a generating function")
    p.add_argument("--which", choices=["P", "Q", "RT"], required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--y1", action="store_true", help="print row sums (y = 1) instead")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("map", help="apply a bijection to a JSON diagram or profile")
    p.add_argument("--bijection", choices=["alpha", "beta", "gamma"], required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("patterns", help="list pattern occurrences in a JSON diagram")
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.add_argument("--kind", action="append", default=[], help="e.g. left-nesting or k-crossing:3")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("verify", help="run a named self-check suite")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"nestwork: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
