"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gallery
from .ehrhart import DEFAULT_TOL, ehrhart_polynomial, roots
from .errors import EhrhartError
from .geometry import LatticePolytope, from_json, to_json
from .minima import successive_minima
from .report import dumps
from .survey import candidate_grid, enumerate_polygons, roots_csv
from .theorems import SUITE_NAMES, run_suite, suite_passed


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_source(source: str) -> LatticePolytope:
    """A polytope from a JSON file, ``-`` for standard input, or a ``gallery:`` spec."""
    if source.startswith("gallery:"):
        return gallery.parse_inline(source)
    if source == "-":
        text = sys.stdin.read()
    else:
        path = Path(source)
        if not path.is_file():
            raise UsageError(f"no such file: {source}")
        text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source}: invalid JSON ({exc})") from exc
    return from_json(data)


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ehrhart-minima", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("ehrpoly", help="Ehrhart polynomial and roots")
    e.add_argument("source")
    e.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)

    m = sub.add_parser("minima", help="successive minima with witnesses")
    m.add_argument("source")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("source", nargs="?", help="polytope; omit to run the whole gallery")
    v.add_argument("--suite", choices=SUITE_NAMES, default="all")

    g = sub.add_parser("gallery", help="print a gallery polytope as a polytope file")
    g.add_argument("family", choices=sorted(gallery.FAMILIES))
    for flag in ("n", "q", "l", "k", "p", "m", "base", "left", "right"):
        g.add_argument(f"--{flag}")

    s = sub.add_parser("survey", help="enumerate lattice polygons and write the root atlas")
    s.add_argument("--box", type=int, default=3)
    s.add_argument("--max-vertices", type=int, default=8)
    s.add_argument("--out", required=True)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--grid", metavar="BOUNDARY,INTERIOR",
                   help="also emit candidate (boundary, interior) classes up to these bounds")
    s.add_argument("--figure", help="optional PNG rendering of the atlas")
    return p


def _gallery_params(args) -> dict:
    _, names = gallery.FAMILIES[args.family]
    params = {}
    for key in names:
        value = getattr(args, key)
        if value is None:
            raise UsageError(f"{args.family} needs --{key}")
        if key in ("base", "left", "right"):
            value = gallery.parse_inline(value)
        params[key] = value
    extra = [k for k in ("n", "q", "l", "k", "p", "m", "base", "left", "right")
             if k not in names and getattr(args, k) is not None]
    if extra:
        raise UsageError(f"{args.family} does not take --{', --'.join(extra)}")
    return params


def _run(args, out) -> int:
    if args.command == "ehrpoly":
        P = load_source(args.source)
        E = ehrhart_polynomial(P)
        print(dumps({"name": P.name, "coefficients": E, "roots": roots(E, args.tol)}), file=out)
    elif args.command == "minima":
        P = load_source(args.source)
        prof = successive_minima(P)
        print(dumps({"name": P.name, **prof.to_json()}), file=out)
    elif args.command == "verify":
        polys = None if args.source is None else [load_source(args.source)]
        reports = run_suite(args.suite, polys)
        print(dumps(reports), file=out)
        return 0 if suite_passed(reports) else 1
    elif args.command == "gallery":
        P = gallery.build(args.family, **_gallery_params(args))
        print(dumps(to_json(P)), file=out)
    elif args.command == "survey":
        records = enumerate_polygons(args.box, args.max_vertices, workers=args.workers)
        if args.grid:
            try:
                mb, mi = (int(x) for x in args.grid.split(","))
            except ValueError as exc:
                raise UsageError("--grid expects BOUNDARY,INTERIOR") from exc
            realized = {(r.g2, r.g1) for r in records}
            extra = [r for r in candidate_grid(mb, mi) if (r.g2, r.g1) not in realized]
            text = roots_csv(extra + records, realized=realized)
        else:
            text = roots_csv(records)
        Path(args.out).write_text(text)
        if args.figure:
            from .plotting import render_atlas

            render_atlas(records, args.figure)
    return 0


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except (UsageError, EhrhartError, ValueError, OSError) as exc:
        print(f"ehrhart-minima: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
