"""Command-line entry point: ``a1score compare|plot|rank``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .catalog import load_catalog, rank
from .comparator import ScanRange, compare
from .complexity import parse
from .errors import A1Error, DomainError, ParseError, UnsupportedExpression
from .metric import A1Config, AlgorithmProfile
from .plot import sample_pair, to_csv, to_svg
from .report import format_kv, format_ranking, format_text

log = logging.getLogger("a1score")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3


class InputError(Exception):
    pass


def _shared(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=float, default=3.0, help="decision point n* (> 1, default 3)")
    p.add_argument("--xi", type=float, default=1.0, help="scaling factor (default 1)")
    p.add_argument("--log-base", type=float, default=2.0, help="logarithm base (default 2)")
    p.add_argument("--scan", default="2:1000:512", help="lo:hi:samples, geometric spacing")


def _profile_flags(p: argparse.ArgumentParser) -> None:
    for side in ("x", "y"):
        p.add_argument(f"--{side}-time", required=True, help=f"time complexity of {side.upper()}")
        p.add_argument(f"--{side}-space", required=True, help=f"space complexity of {side.upper()}")
        p.add_argument(f"--{side}-name", default=side.upper())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="a1score", description="Compare algorithms by A1-Score.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", help="pairwise verdict for two algorithms")
    _profile_flags(p)
    _shared(p)
    p.add_argument("--format", choices=("text", "kv"), default="text")

    p = sub.add_parser("plot", help="write A1 curves as CSV and/or SVG")
    _profile_flags(p)
    _shared(p)
    p.add_argument("--out", required=True, help="output path; extension is replaced per format")
    p.add_argument("--emit", choices=("csv", "svg", "both"), default="both")
    p.add_argument("--title", default=None)

    p = sub.add_parser("rank", help="round-robin verdicts over a catalog CSV")
    p.add_argument("catalog", help="CSV file with header name,time,space")
    _shared(p)
    return parser


def _config(args) -> A1Config:
    try:
        return A1Config.make(args.xi, args.log_base)
    except DomainError as exc:
        flag = "--xi" if "xi" in str(exc) else "--log-base"
        raise InputError(f"{flag}: {exc}") from None


def _scan(args) -> ScanRange:
    try:
        return ScanRange.parse(args.scan)
    except DomainError as exc:
        raise InputError(f"--scan: {exc}") from None


def _n_star(args) -> float:
    if not args.n > 1:
        raise InputError(f"--n: n must be > 1, got {args.n:g}")
    return args.n


def _profiles(args):
    out = []
    for side in ("x", "y"):
        name = getattr(args, f"{side}_name")
        exprs = {}
        for kind in ("time", "space"):
            flag = f"--{side}-{kind}"
            text = getattr(args, f"{side}_{kind}")
            try:
                exprs[kind] = parse(text)
            except ParseError as exc:
                raise InputError(f"{flag}: {exc}\n{exc.pointer()}") from None
            except UnsupportedExpression as exc:
                raise InputError(f"{flag}: {exc}") from None
        out.append(AlgorithmProfile(name, exprs["time"], exprs["space"]))
    return out


def run_compare(args, out=None) -> int:
    out = out or sys.stdout
    x, y = _profiles(args)
    config, scan_range, n_star = _config(args), _scan(args), _n_star(args)
    verdict = compare(x, y, n_star, config, scan_range)
    if args.format == "kv":
        out.write(format_kv(verdict))
    else:
        out.write(format_text(verdict, x, y, config, scan_range))
    return EXIT_OK


def run_plot(args, out=None) -> int:
    out = out or sys.stdout
    x, y = _profiles(args)
    config, scan_range = _config(args), _scan(args)
    data = sample_pair(x, y, config, scan_range)
    if data.omitted:
        log.warning("%d sample(s) overflowed and were omitted", data.omitted)
    base = Path(args.out)
    targets = []
    if args.emit in ("csv", "both"):
        targets.append((base.with_suffix(".csv") if args.emit == "both" else base, to_csv(data)))
    if args.emit in ("svg", "both"):
        title = args.title or f"A1-Score: {x.name} vs {y.name}"
        targets.append((base.with_suffix(".svg") if args.emit == "both" else base,
                        to_svg([data.x, data.y], title=title)))
    for path, content in targets:
        try:
            path.write_text(content, encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror or exc}") from None
        out.write(f"wrote {path}\n")
    if data.omitted:
        out.write(f"warning: {data.omitted} overflowed sample(s) omitted\n")
    return EXIT_OK


def run_rank(args, out=None) -> int:
    out = out or sys.stdout
    config, scan_range, n_star = _config(args), _scan(args), _n_star(args)
    try:
        entries = load_catalog(args.catalog)
    except OSError as exc:
        raise OSError(f"cannot read {args.catalog}: {exc.strerror or exc}") from None
    out.write(format_ranking(rank(entries, n_star, config, scan_range), n_star))
    return EXIT_OK


COMMANDS = {"compare": run_compare, "plot": run_plot, "rank": run_rank}


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, A1Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
