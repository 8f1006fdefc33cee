"""Command-line front end.

    ldot parse     --calculus {lam|ld|lamd} [-D name=term]... TERM
    ldot translate --via {star|dagger|hash|natural|iota|pi|cps-ld} [-D ...] TERM
    ldot reduce    --calculus ... --strategy lo --fuel N --format {text|json} TERM
    ldot reach     --calculus ... --fuel N --frontier N TERM TARGET
    ldot check     --suite NAME|all --n TRIALS --size S --seed SEED

Exit codes: 0 success (fuel exhaustion only warns on stderr), 1 usage or
parse error, 2 a property suite found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import DEFAULT_FUEL, Fuel, reaches, reduce
from .parser import ParseError, infer_calculus, parse, pretty
from .props import SUITES, GenConfig
from .terms import Term, is_value, subst
from .translate import TRANSLATIONS


def _apply_defs(t: Term, defs: list[str], calculus: str) -> Term:
    for d in defs:
        name, _, body = d.partition("=")
        if not _:
            raise ParseError(f"bad definition {d!r}, expected name=term", 0)
        t = subst(t, parse(body, calculus), name.strip())
    return t


def _parse_term(args, text: str, calculus: str) -> Term:
    t = parse(text, calculus)
    return _apply_defs(t, getattr(args, "defs", []) or [], calculus)


def _fuel(args) -> Fuel:
    return Fuel(
        getattr(args, "fuel", None) or DEFAULT_FUEL.max_steps,
        getattr(args, "frontier", None) or DEFAULT_FUEL.max_frontier,
    )


def cmd_parse(args) -> int:
    calculus = args.calculus or infer_calculus(args.term)
    print(pretty(_parse_term(args, args.term, calculus)))
    return 0


def cmd_translate(args) -> int:
    source, fn = TRANSLATIONS[args.via]
    t = _parse_term(args, args.term, source)
    if args.via in ("dagger", "natural") and not is_value(t, source):
        # dagger is only defined on values; natural tolerates any lam term
        if args.via == "dagger":
            print("error: --via dagger requires a value", file=sys.stderr)
            return 1
    print(pretty(fn(t)))
    return 0


def cmd_reduce(args) -> int:
    calculus = args.calculus or infer_calculus(args.term)
    t = _parse_term(args, args.term, calculus)
    trace = reduce(t, calculus, fuel=_fuel(args))
    if args.format == "json":
        print(json.dumps(trace.to_json(), indent=2))
    else:
        print(pretty(trace.initial))
        for s in trace.steps:
            print(f"  --{s.rule}--> {pretty(s.term)}")
        print(f"final: {pretty(trace.final)}")
    if trace.status == "fuel_exhausted":
        print("warning: fuel exhausted before a normal form", file=sys.stderr)
    return 0


def cmd_reach(args) -> int:
    calculus = args.calculus or infer_calculus(args.term)
    t = _parse_term(args, args.term, calculus)
    target = _parse_term(args, args.target, calculus)
    res = reaches(t, target, calculus, _fuel(args))
    if res.found:
        print(json.dumps(res.trace.to_json(), indent=2))
        return 0
    if res.status == "refuted":
        print("not reachable (reduction graph fully explored)")
        return 0
    print("warning: fuel exhausted, reachability unknown", file=sys.stderr)
    return 0


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = GenConfig(max_size=args.size, seed=args.seed)
    failed = False
    exhausted = False
    reports = []
    for name in names:
        rep = SUITES[name](cfg, trials=args.n)
        reports.append(rep.to_json())
        print(rep.summary(), file=sys.stderr)
        failed = failed or not rep.ok
        exhausted = exhausted or rep.fuel_exhaustions > 0
    print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
    if exhausted:
        print("warning: some trials exhausted their fuel", file=sys.stderr)
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ldot", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_calculus=True):
        if with_calculus:
            p.add_argument("--calculus", choices=("lam", "ld", "lamd"), default=None)
        p.add_argument(
            "-D",
            dest="defs",
            action="append",
            metavar="NAME=TERM",
            help="substitute NAME by TERM after parsing (may repeat)",
        )

    p = sub.add_parser("parse", help="echo the canonical pretty form")
    common(p)
    p.add_argument("term")
    p.set_defaults(fn=cmd_parse)

    p = sub.add_parser("translate", help="apply a translation")
    p.add_argument("--via", choices=tuple(TRANSLATIONS), required=True)
    common(p, with_calculus=False)
    p.add_argument("term")
    p.set_defaults(fn=cmd_translate)

    p = sub.add_parser("reduce", help="leftmost-outermost reduction trace")
    common(p)
    p.add_argument("--strategy", choices=("lo",), default="lo")
    p.add_argument("--fuel", type=int, default=None)
    p.add_argument("--frontier", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("term")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("reach", help="search for a reduction to a target term")
    common(p)
    p.add_argument("--fuel", type=int, default=None)
    p.add_argument("--frontier", type=int, default=None)
    p.add_argument("term")
    p.add_argument("target")
    p.set_defaults(fn=cmd_reach)

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument(
        "--suite", choices=tuple(SUITES) + ("all",), default="all"
    )
    p.add_argument("--n", type=int, default=100, help="trials per suite")
    p.add_argument("--size", type=int, default=10, help="max generated term size")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(fn=cmd_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse uses exit code 2 for usage errors; 2 is reserved for
        # counterexamples here, so usage problems map to 1
        return 0 if e.code in (0, None) else 1
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
