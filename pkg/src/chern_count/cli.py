"""Command-line front end.

    chern-count formula --sing D5
    chern-count eval --sing A1 --surface p2 --degree 3
    chern-count table [--surface ...] [--max-codim 5]
    chern-count selftest
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cache
from .chern_ring import TwoPointClass, format_polynomial
from .selftest import run_all
from .strata import OnePointEngine, codimension
from .surfaces import (
    SurfaceSpec,
    all_singularities,
    class_of,
    count,
    custom_surface,
    expected_point_count,
    load_surface,
    p1_x_p1,
    projective_plane,
)
from .two_point import TwoPointEngine

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _bidegree(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected a,b with integers a and b") from None
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sing", help="A1..A7, D4..D7, E6, E7, or A1X for a node plus X")
    common.add_argument("--surface", choices=["p2", "p1xp1", "custom"])
    common.add_argument("--degree", type=int, help="degree d of L = O(d) on p2")
    common.add_argument("--bidegree", type=_bidegree, help="a,b for L = O(a,b) on p1xp1")
    common.add_argument("--geometry-file", help="surface JSON for --surface custom")
    common.add_argument("--format", choices=["text", "latex", "json"], default="text")
    common.add_argument("--max-codim", type=int, default=7)

    parser = argparse.ArgumentParser(
        prog="chern-count",
        description="Universal counts of curves with one or two prescribed singular points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("formula", parents=[common], help="print the universal formula")
    sub.add_parser("eval", parents=[common], help="evaluate the count on a surface")
    sub.add_parser("table", parents=[common], help="all formulas, or all values on a surface")
    sub.add_parser("selftest", parents=[common], help="reproduce the reference tables")
    return parser


def _surface(args) -> SurfaceSpec | None:
    if args.surface is None:
        if args.degree is not None or args.bidegree is not None or args.geometry_file:
            raise UsageError("--degree/--bidegree/--geometry-file need --surface")
        return None
    if args.surface == "p2":
        if args.degree is None:
            raise UsageError("--surface p2 needs --degree")
        return projective_plane(args.degree)
    if args.surface == "p1xp1":
        if args.bidegree is None:
            raise UsageError("--surface p1xp1 needs --bidegree a,b")
        return p1_x_p1(*args.bidegree)
    if not args.geometry_file:
        raise UsageError("--surface custom needs --geometry-file")
    try:
        spec = load_surface(args.geometry_file)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read geometry file: {exc}") from None
    return custom_surface(spec.geometry, spec.name, spec.params)


def _check_sing(sing: str | None, max_codim: int) -> str:
    if not sing:
        raise UsageError("--sing is required")
    if sing not in all_singularities():
        raise UsageError(f"unsupported singularity {sing!r}")
    if codimension(sing) > max_codim:
        raise UsageError(f"{sing} has codimension {codimension(sing)} > --max-codim {max_codim}")
    return sing


def _num(v: Fraction):
    return int(v) if v.denominator == 1 else str(v)


def _render(cls, style: str) -> str:
    order = "grouped" if isinstance(cls, TwoPointClass) else "canonical"
    return format_polynomial(cls, style, order)


class Session:
    """Engines shared by one invocation, optionally backed by the cache file."""

    def __init__(self):
        self.one = OnePointEngine()
        self.two = TwoPointEngine(one_point=self.one)
        cache.restore(self.one, self.two)

    def close(self):
        cache.persist(self.one, self.two)

    def metadata(self) -> dict:
        return {"variants": self.one.variants.as_dict(), "extrapolated": False}

    def formula_record(self, sing: str) -> dict:
        cls = class_of(sing, self.one, self.two)
        poly = cls.to_polynomial()
        return {
            "sing": sing,
            "codim": codimension(sing),
            "text": _render(cls, "text"),
            "terms": poly.to_json()["terms"],
            "metadata": self.metadata(),
        }

    def eval_record(self, sing: str, surface: SurfaceSpec) -> dict:
        res = count(sing, surface, self.one, self.two)
        try:
            points = expected_point_count(sing, surface)
        except ValueError as exc:
            points = f"error: {exc}"
        out = res.to_json()
        out["points"] = points
        out["surface"] = surface.to_json()
        return out


def _eval_text(rec: dict) -> str:
    amp = rec["ampleness"]
    lines = [
        str(rec["value"]),
        f"ampleness: L must be sufficiently {amp['required']}-ample; satisfied: {amp['satisfied']}",
        f"generic points: {rec['points']}",
    ]
    return "\n".join(lines)


def run(args, out=None) -> int:
    out = out or sys.stdout
    if args.command == "selftest":
        results = run_all()
        if args.format == "json":
            payload = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
            print(json.dumps(payload, indent=2), file=out)
        else:
            for r in results:
                print(r.line(), file=out)
        return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL

    surface = _surface(args)
    session = Session()
    try:
        if args.command == "formula":
            if surface is not None:
                raise UsageError("formula does not take a surface; use eval")
            sing = _check_sing(args.sing, args.max_codim)
            if args.format == "json":
                print(json.dumps(session.formula_record(sing), indent=2), file=out)
            else:
                print(_render(class_of(sing, session.one, session.two), args.format), file=out)
        elif args.command == "eval":
            if surface is None:
                raise UsageError("eval needs --surface")
            sing = _check_sing(args.sing, args.max_codim)
            rec = session.eval_record(sing, surface)
            print(json.dumps(rec, indent=2) if args.format == "json" else _eval_text(rec), file=out)
        elif args.command == "table":
            if args.sing:
                raise UsageError("table prints every singularity; drop --sing")
            rows = [s for s in all_singularities() if codimension(s) <= args.max_codim]
            if args.format == "json":
                if surface is None:
                    payload = [session.formula_record(s) for s in rows]
                else:
                    payload = [session.eval_record(s, surface) for s in rows]
                print(json.dumps(payload, indent=2), file=out)
            else:
                for s in rows:
                    if surface is None:
                        body = _render(class_of(s, session.one, session.two), args.format)
                    else:
                        body = str(_num(count(s, surface, session.one, session.two).value))
                    print(f"N({s}) = {body}", file=out)
    finally:
        session.close()
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (UsageError, ValueError) as exc:
        if getattr(args, "format", "text") == "json":
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"chern-count: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
