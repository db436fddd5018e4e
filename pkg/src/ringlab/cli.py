"""Command-line entry point: ``ringlab run|suite|ideals|search``.

Exit codes: 0 success, 1 a query failed, 2 a theorem property was violated,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dsl
from .harness import suite

EXIT_OK, EXIT_QUERY_ERROR, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 64

PROFILES = {
    "default": {},
    "small": {"max_order": 16},
    "wide": {"max_order": 48},
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _dump(record):
    return json.dumps(record, sort_keys=True, default=str)


def _pretty_line(rec):
    if "define" in rec:
        body = rec.get("error") or rec.get("summary", "")
        return f"{rec['kind']:<7} {rec['define']:<10} {body}"
    head = f"{rec['query']} {' '.join(map(str, rec['args']))}"
    if "error" in rec:
        return f"{head:<32} ERROR  {rec['error']}"
    result = rec["result"]
    shown = {True: "TRUE", False: "FALSE"}.get(result, result)
    extra = ""
    if "counterexample" in rec:
        extra = f"  counterexample={json.dumps(rec['counterexample'], default=str)}"
    elif isinstance(rec.get("witness"), dict):
        extra = f"  witness={json.dumps(rec['witness'], default=str)}"
    flags = f"  [{', '.join(rec['flags'])}]" if rec.get("flags") else ""
    return f"{head:<32} {shown:<9}{extra}{flags}"


def _read_program(path):
    text = Path(path).read_text(encoding="utf-8")
    return dsl.parse(text)


def cmd_run(args):
    try:
        program = _read_program(args.file)
    except dsl.DslError as exc:
        print(_dump({"error": str(exc), "line": exc.line, "column": exc.col}))
        return EXIT_QUERY_ERROR
    status = EXIT_OK
    for rec in dsl.execute(program, timing=not args.no_timing, verbose=args.verbose):
        if "error" in rec:
            status = EXIT_QUERY_ERROR
        print(_pretty_line(rec) if args.pretty else _dump(rec))
    return status


def _profile(spec):
    if spec in PROFILES:
        return PROFILES[spec]
    path = Path(spec)
    if path.exists():
        return json.loads(path.read_text())
    raise SystemExit(f"unknown profile {spec!r}")


def cmd_suite(args):
    report = suite.run_suite(seed=args.seed, profile=_profile(args.profile), target=args.target,
                             timing=not args.no_timing)
    print(suite.dumps(report))
    return EXIT_OK if report["summary"]["ok"] else EXIT_VIOLATION


def cmd_ideals(args):
    try:
        program = _read_program(args.file)
        for rec in dsl.list_ideals(program, args.ring):
            print(_dump(rec))
    except (dsl.DslError, KeyError) as exc:
        print(_dump({"error": dsl._message(exc)}))
        return EXIT_QUERY_ERROR
    return EXIT_OK


def cmd_search(args):
    try:
        report = suite.counterexample_search(args.prop, args.budget, seed=args.seed,
                                             profile=_profile(args.profile))
    except KeyError as exc:
        print(_dump({"error": dsl._message(exc)}))
        return EXIT_USAGE
    print(suite.dumps(report))
    probe = suite.REGISTRY[args.prop].probe
    return EXIT_VIOLATION if report["violations"] and not probe else EXIT_OK


def build_parser():
    p = _Parser(prog="ringlab", description="Finite commutative ring laboratory.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="execute a .ring script")
    r.add_argument("file")
    r.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from records")
    r.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON lines")
    r.add_argument("--verbose", action="store_true", help="also report definitions")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("suite", help="run the property suite")
    s.add_argument("--profile", default="default", help=f"one of {', '.join(PROFILES)} or a JSON file")
    s.add_argument("--seed", default="0")
    s.add_argument("--target", type=int, default=None, help="hits per property (default 100)")
    s.add_argument("--no-timing", action="store_true")
    s.set_defaults(func=cmd_suite)

    i = sub.add_parser("ideals", help="list the ideals of a ring defined in a script")
    i.add_argument("file")
    i.add_argument("--ring", required=True)
    i.set_defaults(func=cmd_ideals)

    c = sub.add_parser("search", help="mine random instances for a counterexample")
    c.add_argument("prop")
    c.add_argument("--budget", type=int, default=1000)
    c.add_argument("--seed", default="0")
    c.add_argument("--profile", default="default")
    c.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
