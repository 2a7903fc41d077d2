"""Command line entry point ``ramify``.

Exit codes: 0 success, 1 invalid input or a failed check, 2 precision
exhausted (rerun with a larger ``--precision``).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import catalog
from .cdvf import DEFAULT_PRECISION, Precision
from .checks import SUITES, resolve_suite, run_suite
from .errors import PrecisionExhausted, RamifyError, ValidationError
from .report import attributing_precision, build_report, load_extension, table_lines
from .serial import canonical_json, load_description

log = logging.getLogger("ramify")


def _precision(arg) -> Precision:
    cap = arg if arg is not None else os.environ.get("RAMIFY_PRECISION")
    if cap is None:
        return DEFAULT_PRECISION
    try:
        cap = int(cap)
    except ValueError:
        raise ValidationError(f"precision must be an integer, got {cap!r}", "--precision") from None
    if cap < 1:
        raise ValidationError("precision must be positive", "--precision")
    return Precision.scaled(cap)


def _write(text: str, out) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_report(args) -> int:
    prec = _precision(args.precision)
    doc = load_description(args.file)
    rep = build_report(doc, prec)
    if args.table:
        _write("\n".join(table_lines(json.loads(canonical_json(rep)))) + "\n", args.out)
    else:
        _write(canonical_json(rep), args.out)
    return 0


def cmd_check(args) -> int:
    prec = _precision(args.precision)
    suite = resolve_suite(args.suite)
    if args.catalog:
        docs = [catalog.get(n) for n in catalog.names()]
    elif args.file:
        docs = [load_description(args.file)]
    else:
        raise ValidationError("give a description file or --catalog")
    failed = 0
    rows_out = []
    for doc in docs:
        rows = attributing_precision(lambda pr, doc=doc: _suite_rows(doc, pr, suite), prec)
        for E, row in rows:
            row = {"extension": E.name, **row}
            rows_out.append(row)
            if not row["ok"]:
                failed += 1
            if not args.json:
                mark = "ok  " if row["ok"] else "FAIL"
                note = "  (strict, expected)" if row.get("expected_strict") else ""
                print(f"{mark} {E.name:<20} {row['suite']:<11} {row['check']}{note}")
    if args.json:
        sys.stdout.write(canonical_json(rows_out))
    else:
        print(f"{len(rows_out) - failed} passed, {failed} failed")
    return 1 if failed else 0


def _suite_rows(doc, prec, suite):
    E = load_extension(doc, prec)
    return [(E, row) for row in run_suite(E, suite)]


def cmd_catalog(args) -> int:
    if args.emit:
        _write(canonical_json(catalog.get(args.emit)), args.out)
    else:
        for name in catalog.names():
            print(f"{name:<20} {catalog.CATALOG[name].get('description', '')}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ramify", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("report", help="full ramification report for one extension")
    rp.add_argument("file")
    rp.add_argument("--precision", type=str, default=None)
    fmt = rp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="canonical JSON (default)")
    fmt.add_argument("--table", action="store_true", help="human-readable summary")
    rp.add_argument("--out")
    rp.set_defaults(func=cmd_report)

    cp = sub.add_parser("check", help="run an invariant suite")
    cp.add_argument("file", nargs="?")
    cp.add_argument("--catalog", action="store_true", help="run over every catalog entry")
    cp.add_argument("--suite", default="all", help="one of " + ", ".join(SUITES))
    cp.add_argument("--precision", type=str, default=None)
    cp.add_argument("--json", action="store_true")
    cp.set_defaults(func=cmd_check)

    kp = sub.add_parser("catalog", help="list or emit shipped examples")
    kp.add_argument("--list", action="store_true")
    kp.add_argument("--emit", metavar="NAME")
    kp.add_argument("--out")
    kp.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except PrecisionExhausted as exc:
        print(f"ramify: precision exhausted: {exc}", file=sys.stderr)
        print("ramify: rerun with a larger --precision (or RAMIFY_PRECISION)", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"ramify: invalid input: {exc}", file=sys.stderr)
        return 1
    except RamifyError as exc:
        print(f"ramify: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ramify: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
