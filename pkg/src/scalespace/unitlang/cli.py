"""``unitc``: batch checker and query tool for ``.units`` programs."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from ..exactla import parse_rational
from ..scales import Registry
from .evaluator import Diagnostic, Evaluator, Severity, render_group
from .lexer import LexError
from .loader import DefinitionsError, load_definitions
from .nodes import Dim, Express, PiGroups
from .parser import ParseError, parse, parse_expression, parse_names

JSON_VERSION = "1"
ENV_DEFS = "UNITC_DEFS"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--defs", metavar="FILE",
                        help=f"definitions file (default: ${ENV_DEFS}, else the bundled si.units)")
    common.add_argument("--no-defs", action="store_true",
                        help="start from an empty registry; the program must declare its bases")
    common.add_argument("--json", action="store_true", help="emit one JSON document on stdout")

    ap = argparse.ArgumentParser(prog="unitc", description=__doc__.split(":", 1)[1].strip())
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("check", parents=[common], help="evaluate a .units file")
    p.add_argument("file", metavar="FILE")
    p = sub.add_parser("dim", parents=[common], help="dimension vector of an expression")
    p.add_argument("expr", metavar="EXPR")
    p = sub.add_parser("express", parents=[common], help="write a scale in another basis")
    p.add_argument("expr", metavar="EXPR")
    p.add_argument("--basis", required=True, metavar="A,B,C")
    p = sub.add_parser("pigroups", parents=[common], help="dimensionless power products")
    p.add_argument("names", metavar="A,B,...")
    return ap


def _registry(args) -> Registry:
    if args.no_defs:
        return Registry()
    return load_definitions(args.defs or os.environ.get(ENV_DEFS) or None)


def _error(exc) -> Diagnostic:
    return Diagnostic(Severity.ERROR, exc.line, exc.column, exc.code, exc.message)


def _source(args) -> str:
    if args.command == "check":
        return args.file
    return "<names>" if args.command == "pigroups" else "<expr>"


def _statements(args):
    """Parse the command's input into statements."""
    if args.command == "check":
        return parse(Path(args.file).read_text(encoding="utf-8"))
    if args.command == "dim":
        return [Dim(parse_expression(args.expr), (1, 1))]
    if args.command == "express":
        basis = parse_names(args.basis)
        if len(basis) != 3:
            raise ParseError(f"a scale basis needs exactly 3 names, got {len(basis)}", 1, 1)
        return [Express(parse_expression(args.expr), tuple(basis), (1, 1))]
    return [PiGroups(tuple(parse_names(args.names)), (1, 1))]


def _summary(res) -> str:
    p = res.payload
    if "error" in p:
        return f"FAILED ({p['error']})"
    if res.kind == "dim":
        return p["dims"]
    if res.kind == "check":
        return "ok" if res.ok else "FAILED"
    if res.kind == "express":
        c = " ".join(f"c{i}={x}" for i, x in enumerate(p["exponents"], 1))
        return f"{c} r={p['coefficient']!r}"
    if res.kind == "pigroups":
        if not p["groups"]:
            return "no dimensionless groups"
        groups = ([parse_rational(x) for x in g] for g in p["groups"])
        return "; ".join(render_group(p["names"], g) for g in groups)
    return repr(p["value"])


def document(results, diagnostics) -> str:
    doc = {
        "version": JSON_VERSION,
        "results": [r.to_json() for r in results],
        "diagnostics": [d.to_json() for d in diagnostics],
    }
    return json.dumps(doc, indent=2) + "\n"


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    try:
        registry = _registry(args)
    except (OSError, UnicodeDecodeError, DefinitionsError) as exc:
        print(f"unitc: cannot load definitions: {exc}", file=stderr)
        return 2

    results, diagnostics = [], []
    source = _source(args)
    try:
        statements = _statements(args)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"unitc: {exc}", file=stderr)
        return 2
    except (LexError, ParseError) as exc:
        diagnostics.append(_error(exc))
        code = 2
    else:
        ev = Evaluator(registry).run(statements)
        results, diagnostics = ev.results, ev.diagnostics
        code = ev.exit_code()

    if args.json:
        stdout.write(document(results, diagnostics))
    else:
        for res in results:
            if args.command == "check":
                print(f"{res.line}:{res.column}: {res.stmt}  ->  {_summary(res)}", file=stdout)
            else:
                print(_summary(res), file=stdout)
    for d in diagnostics:
        print(f"{source}:{d.line}:{d.column}: {d.severity.value}: {d.code}: {d.message}", file=stderr)
    return code


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
