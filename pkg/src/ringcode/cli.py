"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 bad input, 3 degenerate
spec, 4 unwritable catalog.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from . import __version__
from .boolean import parse_subset
from .construction import TYPES, DefiningSetSpec, DegenerateDefiningSet, TooLarge
from .kernels import BACKEND
from .reporting import (
    CHECKS,
    SweepConfig,
    catalog_record,
    check_spec,
    compile_predicate,
    distribution_csv,
    dumps,
    parse_m_range,
    records_csv,
    analyze_spec,
)

log = logging.getLogger("ringcode")

EXIT_MISMATCH, EXIT_USAGE, EXIT_DEGENERATE, EXIT_CATALOG = 1, 2, 3, 4


class UsageError(Exception):
    pass


def load_spec(text: str) -> DefiningSetSpec:
    """Spec from inline JSON or from a path to a JSON file."""
    if not text.lstrip().startswith("{") and os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return DefiningSetSpec.from_json(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def spec_from_args(args) -> DefiningSetSpec:
    if args.spec:
        return load_spec(args.spec)
    if args.m is None or args.type is None:
        raise UsageError("give --spec, or --m and --type")
    try:
        return DefiningSetSpec(
            args.m, args.type, tuple(parse_subset(args.M, args.m)), tuple(parse_subset(args.N, args.m)), args.side
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def sweep_from_args(args) -> SweepConfig:
    try:
        return SweepConfig(
            m_values=parse_m_range(args.m),
            types=_split(args.types),
            sides=[s.lower() for s in _split(args.sides)],
            max_subset_size=args.max_subset_size,
            checks=_split(args.checks) if hasattr(args, "checks") else [],
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _split(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _map(func, items: Iterable, jobs: int):
    """Ordered map, fanned out over processes when ``jobs > 1``."""
    if jobs <= 1:
        yield from map(func, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(func, items, chunksize=8)


def cmd_analyze(args, out) -> int:
    spec = spec_from_args(args)
    try:
        analysis = analyze_spec(spec)
    except DegenerateDefiningSet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except TooLarge as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        out.write(distribution_csv(analysis))
    else:
        out.write(dumps(analysis) + "\n")
    return 0


class _Checker:
    def __init__(self, checks: Sequence[str]):
        self.checks = list(checks)

    def __call__(self, spec: DefiningSetSpec):
        return spec, check_spec(spec, self.checks)


def cmd_verify(args, out) -> int:
    config = sweep_from_args(args)
    counters = {c: [0, 0] for c in config.checks}  # tested, mismatches
    shown = 0
    total = failed_specs = 0
    for spec, mismatches in _map(_Checker(config.checks), config.specs(), args.jobs):
        total += 1
        for c in config.checks:
            counters[c][0] += 1
        if mismatches:
            failed_specs += 1
        for mm in mismatches:
            counters[mm.check][1] += 1
            if shown < args.max_report:
                out.write(f"MISMATCH {mm.check} {mm.spec}: {mm.detail}\n")
                shown += 1
    for c, (tested, bad) in counters.items():
        out.write(f"{c:14s} specs={tested} mismatches={bad} {'PASS' if not bad else 'FAIL'}\n")
    out.write(f"total specs={total} failing={failed_specs} backend={BACKEND}\n")
    return EXIT_MISMATCH if failed_specs else 0


def _record(spec: DefiningSetSpec) -> dict:
    return catalog_record(spec)


def cmd_search(args, out) -> int:
    config = sweep_from_args(args)
    try:
        predicate = compile_predicate(args.where)
    except (ValueError, SyntaxError) as exc:
        raise UsageError(f"bad predicate: {exc}") from None
    catalog = None
    if args.catalog:
        try:
            catalog = open(args.catalog, "a")
        except OSError as exc:
            print(f"error: cannot write catalog: {exc}", file=sys.stderr)
            return EXIT_CATALOG
    hits = []
    try:
        for record in _map(_record, config.specs(), args.jobs):
            if not predicate(record):
                continue
            hits.append(record)
            if args.format != "csv":
                out.write(dumps(record) + "\n")
            if catalog:
                catalog.write(dumps(record) + "\n")
    finally:
        if catalog:
            catalog.close()
    if args.format == "csv":
        out.write(records_csv(hits))
    log.info("%d matching records", len(hits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="ringcode",
        description="Codes over the ring E from simplicial complexes, and their binary Gray images.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze one spec")
    p.add_argument("--spec", help='JSON like {"m":5,"type":"T1","M":[1,2,3],"N":[2,3,4],"side":"left"}, or a file')
    p.add_argument("--m", type=int)
    p.add_argument("--type", choices=TYPES)
    p.add_argument("--M", default="", help='subset of [m], e.g. "1,3"')
    p.add_argument("--N", default="")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_analyze)

    def sweep_args(p):
        p.add_argument("--m", default="1..3", help='m range, e.g. "1..4"')
        p.add_argument("--types", default=",".join(TYPES))
        p.add_argument("--sides", default="left,right")
        p.add_argument("--max-subset-size", type=int, default=None, help="skip M, N larger than this")

    p = sub.add_parser("verify", parents=[common], help="check every claim over a parameter grid")
    sweep_args(p)
    p.add_argument("--checks", default=",".join(CHECKS))
    p.add_argument("--max-report", type=int, default=10, help="mismatches to print in full")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="list specs whose report matches a predicate")
    sweep_args(p)
    p.add_argument("--where", default="True", help='e.g. "num_weights <= 3 and minimal"')
    p.add_argument("--catalog", help="append matching records (JSON lines) to this file")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "json")
    args.jobs = getattr(args, "jobs", 1)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
