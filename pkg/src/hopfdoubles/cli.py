"""Command line interface.

Exit codes: 0 when every check passes, 1 when some check fails, 2 for
invalid input (unreadable or malformed files, unknown names, bad options).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import fileformat
from .catalog import CATALOG_NAMES, catalog_build
from .checks import SUITES, run_suite
from .errors import AxiomFailure, InvalidInput
from .hopf import HopfAlgebra, check_associative, check_unital, dual, verify_hopf
from .reports import Report, timed

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _source(source: str):
    """``catalog:<name>`` or a path to an algebra file."""
    if source.startswith("catalog:"):
        return catalog_build(source, verify=False)
    return fileformat.load(source)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2, ensure_ascii=False) + "\n"
    return rep.to_text() + "\n"


def cmd_validate(args) -> int:
    alg = fileformat.load(args.file)
    if isinstance(alg, HopfAlgebra):
        rep = verify_hopf(alg)
    else:
        rep = Report("algebra", alg.name)
        rep.add("associativity", "associative algebra", check_associative(alg))
        rep.add("unit", "unital algebra", check_unital(alg))
    _write(_render(rep, args.report), args.output)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.action == "list":
        _write("".join(name + "\n" for name in CATALOG_NAMES), args.output)
        return EXIT_OK
    if not args.name:
        raise InvalidInput("catalog emit needs an algebra name")
    alg = catalog_build(args.name)
    _write(fileformat.dumps(alg), args.output)
    return EXIT_OK


def cmd_build(args) -> int:
    from .doubles import build_drinfeld_double

    A = _source(args.source)
    if not isinstance(A, HopfAlgebra):
        raise InvalidInput(f"{A.name} is a plain algebra; building {args.what} needs a Hopf algebra")
    rep = verify_hopf(A)
    if not rep.passed:
        sys.stderr.write(rep.to_text() + "\n")
        return EXIT_FAIL
    if args.what == "dual":
        out, _ = dual(A)
    else:
        pkg = build_drinfeld_double(A)
        out = {"double": lambda: pkg.drinfeld, "tdual": lambda: pkg.tdual,
               "heisenberg": lambda: pkg.heisenberg.algebra}[args.what]()
    _write(fileformat.dumps(out), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    A = _source(args.source)
    if not isinstance(A, HopfAlgebra):
        raise InvalidInput(f"{A.name} is a plain algebra; check suites need a Hopf algebra")
    rep = run_suite(args.suite, A, heavy=args.heavy)
    _write(_render(rep, args.report), args.output)
    return EXIT_OK if rep.passed else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopfdoubles", description="Exact Drinfeld and Heisenberg doubles with identity checks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="load an algebra file and check its axioms")
    v.add_argument("file")
    v.add_argument("--report", choices=["json", "text"], default="text")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("catalog", help="list or emit builtin algebras")
    c.add_argument("action", choices=["list", "emit"])
    c.add_argument("name", nargs="?")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_catalog)

    b = sub.add_parser("build", help="build a derived algebra and write it as a file")
    b.add_argument("what", choices=["double", "dual", "tdual", "heisenberg"])
    b.add_argument("source", help="algebra file or catalog:<name>")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    k = sub.add_parser("check", help="run a check suite")
    k.add_argument("suite", choices=SUITES)
    k.add_argument("source", help="algebra file or catalog:<name>")
    k.add_argument("--report", choices=["json", "text"], default="text")
    k.add_argument("-o", "--output")
    k.add_argument("--heavy", action="store_true",
                   help="allow reduction/rtt on algebras of dimension > 8 (slow)")
    k.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        sys.stderr.write(f"hopfdoubles: invalid input: {exc}\n")
        return EXIT_INVALID
    except AxiomFailure as exc:
        sys.stderr.write(f"hopfdoubles: check failed: {exc}\n")
        if isinstance(exc.report, Report):
            sys.stderr.write(exc.report.to_text() + "\n")
        return EXIT_FAIL


cli_main = main

if __name__ == "__main__":
    raise SystemExit(main())
