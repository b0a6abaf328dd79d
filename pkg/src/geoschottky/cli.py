"""Command-line surface: gen / verify / classify / reduce / tiles.

Exit codes: 0 success, 1 verification or reduction failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import document, families, render, schottky, topology
from .arith import format_rational, parse_rational
from .hyperbolic import UpperPoint


def _parse_point(text: str) -> UpperPoint:
    try:
        re_text, im_text = text.split(",")
        return UpperPoint(parse_rational(re_text), parse_rational(im_text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad point {text!r}: {exc}") from None


def _parse_window(text: str):
    try:
        lo, hi, height = (parse_rational(part) for part in text.split(":"))
        return render.RenderSpec(lo, hi, height)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad window {text!r}: {exc}") from None


def _load_description(path: str) -> schottky.SchottkyDescription:
    with open(path, "r", encoding="utf-8") as handle:
        return document.load(handle.read())


def _cmd_gen(args) -> int:
    depth = args.depth
    if args.kind != families.BLOOMING and depth is not None:
        print("--depth only applies to --kind blooming", file=sys.stderr)
        return 2
    if args.kind == families.BLOOMING and depth is None:
        print("--kind blooming requires --depth", file=sys.stderr)
        return 2
    try:
        generators = families.truncate(args.kind, args.level, depth)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    desc = schottky.describe(generators)
    desc = schottky.SchottkyDescription(
        desc.entries, kind=(args.kind, args.level, depth)
    )
    text = document.save(desc)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(text)
    print(f"wrote {args.out}: {desc.pair_count} generator pairs")
    return 0


def _cmd_verify(args) -> int:
    try:
        desc = _load_description(args.document)
    except document.DocumentError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    report = schottky.verify(desc)
    payload = report.as_dict()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    for key in (
        "cond1_disjoint_closures",
        "cond2_no_full_halfcircle",
        "cond3_isometric_match",
        "cond4_hyperbolic",
        "cond5_epsilon",
    ):
        entry = payload[key]
        status = "pass" if entry["pass"] else "FAIL"
        extra = ""
        if key == "cond5_epsilon" and entry["epsilon"] is not None:
            extra = f" epsilon={entry['epsilon']}"
        if entry.get("witness") is not None:
            extra = f" witness={entry['witness']}"
        print(f"{key}: {status}{extra}")
    if report.tangent_pairs:
        print(f"tangent_pairs: {len(report.tangent_pairs)}")
    print(f"overall: {'pass' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _cmd_classify(args) -> int:
    try:
        desc = _load_description(args.document)
        sig = topology.signature(desc)
    except (document.DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"m={sig.rank} b={sig.boundary_cycles} genus={sig.genus} chi={sig.euler}")
    return 0


def _cmd_reduce(args) -> int:
    try:
        desc = _load_description(args.document)
    except document.DocumentError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    try:
        point, word = schottky.reduce(desc, args.point, max_steps=args.max_steps)
    except schottky.StepLimitExceeded as exc:
        print(
            f"step limit {exc.steps} exceeded after word "
            f"{' '.join(map(str, exc.partial_word))}",
            file=sys.stderr,
        )
        return 1
    print(f"point: {format_rational(point.re)},{format_rational(point.im)}")
    print(f"word: {' '.join(map(str, word)) if word else '(empty)'}")
    print(f"steps: {len(word)}")
    return 0


def _cmd_tiles(args) -> int:
    try:
        desc = _load_description(args.document)
    except document.DocumentError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    tiles = schottky.tessellation_tiles(desc, args.max_len)
    by_length: dict[int, int] = {}
    for tile in tiles:
        by_length[len(tile.word)] = by_length.get(len(tile.word), 0) + 1
    for length in sorted(by_length):
        print(f"length {length}: {by_length[length]} tiles")
    print(f"total: {len(tiles)} tiles")
    if args.render:
        spec = args.window or render.auto_window(desc)
        svg = render.render_svg(desc, tiles, spec)
        with open(args.render, "w", encoding="utf-8") as handle:
            handle.write(svg)
        print(f"wrote {args.render}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geoschottky",
        description="exact-arithmetic geometric Schottky groups on the upper half-plane",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family truncation document")
    gen.add_argument("--kind", required=True, choices=families.FAMILY_KINDS)
    gen.add_argument("--level", required=True, type=int)
    gen.add_argument("--depth", type=int, default=None,
                     help="satellite depth (blooming only)")
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_gen)

    ver = sub.add_parser("verify", help="check the Schottky description conditions")
    ver.add_argument("document")
    ver.add_argument("--report", help="write the report as JSON")
    ver.set_defaults(func=_cmd_verify)

    cls = sub.add_parser("classify", help="rank, boundary cycles, genus, Euler")
    cls.add_argument("document")
    cls.set_defaults(func=_cmd_classify)

    red = sub.add_parser("reduce", help="reduce a point into the fundamental domain")
    red.add_argument("document")
    red.add_argument("--point", required=True, type=_parse_point,
                     metavar="RE,IM", help="rational point, e.g. 3/2,1/24")
    red.add_argument("--max-steps", type=int, default=64)
    # accept points with a negative real part as option values
    red._negative_number_matcher = re.compile(r"^-\d")
    red.set_defaults(func=_cmd_reduce)

    til = sub.add_parser("tiles", help="enumerate tessellation tiles, optionally render")
    til.add_argument("document")
    til.add_argument("--max-len", required=True, type=int)
    til.add_argument("--render", help="write an SVG picture here")
    til.add_argument("--window", type=_parse_window, default=None,
                     metavar="LO:HI:HEIGHT", help="view window, e.g. -2.5:2.5:1.2")
    # let window values like -2.5:2.5:1.2 pass as values, not option names
    til._negative_number_matcher = re.compile(r"^-\d")

    til.set_defaults(func=_cmd_tiles)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
