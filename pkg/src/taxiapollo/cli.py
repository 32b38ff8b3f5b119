"""Command-line front end.

Usage::

    taxiapollo construct --p 0,0 --q 2,2 --k 2 [--filled] [--json out.json] [--svg out.svg]
    taxiapollo family    --p 0,0 --q 3,1 [--k 2 --k 3 ...] --svg fig.svg [--png fig.png] [--refs]
    taxiapollo verify    --p 0,0 --q 3,1 --k 3/2 [--grid x1min,x1max,x2min,x2max,step] [--csv m.csv] [--png m.png]
    taxiapollo affine    --p 0,0 --q 2,2 --alpha 1 --beta -2 --gamma 0
    taxiapollo classify  --p 0,0 --q 3,1 [--x 3/2,1/2] [--grid ...] [--csv r.csv] [--png r.png]

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys
from pathlib import Path
from typing import List, Optional

from . import affine_sets, render
from .apollonian import (
    Bolt,
    Polygon,
    SinglePoint,
    apollonian_set,
    filled,
)
from .exact_plane import GeometryError, Point, parse_point, parse_ratio, parse_scalar, ratio
from .oracle import GridSpec, classify_grid, default_grid, verify_curve, verify_filled
from .reference_objects import classify_region
from .serialize import dumps, shape_document

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _arg_type(fn, what):
    def convert(text):
        try:
            return fn(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"invalid {what} {text!r}: {exc}")

    return convert


POINT = _arg_type(parse_point, "point")
RATIO = _arg_type(parse_ratio, "ratio")
SCALAR = _arg_type(parse_scalar, "scalar")
GRID = _arg_type(GridSpec.parse, "grid")


def _add_common(sp: argparse.ArgumentParser, need_q: bool = True) -> None:
    sp.add_argument("--p", type=POINT, required=True, help="first focus, 'x1,x2'")
    sp.add_argument("--q", type=POINT, required=need_q, help="second focus, 'x1,x2'")
    sp.add_argument("--grid", type=GRID, help="'x1min,x1max,x2min,x2max,step'")
    sp.add_argument("--json", metavar="PATH", help="write a machine-readable document")
    sp.add_argument("--svg", metavar="PATH", help="write an SVG figure")
    sp.add_argument("--refs", action="store_true", help="draw coordinate and guide lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taxiapollo", description="Apollonian sets in the taxicab plane")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="construct A(p,q;k) or B(p,q;k)")
    _add_common(sp)
    sp.add_argument("--k", type=RATIO, required=True)
    sp.add_argument("--filled", action="store_true", help="print the filled set B(p,q;k)")

    sp = sub.add_parser("family", help="render several A(p,q;k) in one figure")
    _add_common(sp)
    sp.add_argument("--k", type=RATIO, action="append", help="repeatable; defaults to the standard family")
    sp.add_argument("--png", metavar="PATH", help="also render with matplotlib")
    sp.add_argument("--stroke", type=float, default=2.0)

    sp = sub.add_parser("verify", help="check constructions against the ratio definition")
    _add_common(sp)
    sp.add_argument("--k", type=RATIO, required=True)
    sp.add_argument("--csv", metavar="PATH", help="write mismatches as CSV")
    sp.add_argument("--png", metavar="PATH", help="plot the shape and any mismatches")

    sp = sub.add_parser("affine", help="solve alpha d(x,p) + beta d(x,q) = gamma per region")
    _add_common(sp, need_q=False)
    sp.add_argument("--alpha", type=SCALAR, required=True)
    sp.add_argument("--beta", type=SCALAR, required=True)
    sp.add_argument("--gamma", type=SCALAR, required=True)

    sp = sub.add_parser("classify", help="regions and distance ratios of points")
    _add_common(sp)
    sp.add_argument("--x", type=POINT, help="a single point to classify")
    sp.add_argument("--csv", metavar="PATH", help="write the grid ratios as CSV instead of stdout")
    sp.add_argument("--png", metavar="PATH", help="plot the ratio field")
    return parser


def describe_shape(shape) -> List[str]:
    if isinstance(shape, SinglePoint):
        return ["kind: point", f"point: {shape.point}"]
    if isinstance(shape, Polygon):
        verts = shape.polygon.vertices
        return [f"kind: polygon ({len(verts)} vertices)"] + [f"vertex: {v}" for v in verts]
    if isinstance(shape, Bolt):
        b = shape.bolt
        a, c = b.vertices
        return [
            f"kind: bolt (type {b.bolt_type})",
            f"ray: from {a} direction {b.start_ray_direction}",
            f"vertex: {a}",
            f"vertex: {c}",
            f"ray: from {c} direction {b.end_ray_direction}",
        ]
    bb = shape.barbell
    return [
        "kind: barbell",
        f"vertex: {bb.a}",
        f"vertex: {bb.b}",
        f"quadrant: apex {bb.quadrant_a.apex} signs ({bb.quadrant_a.s1},{bb.quadrant_a.s2})",
        f"quadrant: apex {bb.quadrant_b.apex} signs ({bb.quadrant_b.s1},{bb.quadrant_b.s2})",
        f"guide line: {bb.gl.kind.value} offset {bb.gl.offset}",
    ]


def _viewport(args) -> render.Viewport:
    if args.grid is not None:
        g = args.grid
        return render.Viewport(g.x1_min, g.x1_max, g.x2_min, g.x2_max)
    return render.default_viewport(args.p, args.q)


def cmd_construct(args) -> int:
    shape = apollonian_set(args.p, args.q, args.k)
    fs = None
    out = [f"p: {args.p}", f"q: {args.q}", f"k: {args.k}"]
    if args.filled:
        fs = filled(args.p, args.q, args.k)
        body = fs.body
        if hasattr(body, "quads"):
            for i, quad in enumerate(body.quads, 1):
                out.append(f"quad {i}: " + " ".join(str(v) for v in quad.vertices))
        else:
            out.append(f"filled point: {body.point}")
    else:
        out.extend(describe_shape(shape))
    print("\n".join(out))
    if args.json:
        if fs is None and args.k != 1 and not isinstance(shape, SinglePoint):
            fs = filled(args.p, args.q, args.k)
        Path(args.json).write_text(dumps(shape_document(shape, args.p, args.q, args.k, fs)) + "\n")
    if args.svg:
        scene = render.SceneSpec(args.p, args.q, [args.k], _viewport(args), show_refs=args.refs)
        Path(args.svg).write_text(render.render_svg(scene))
    return EXIT_OK


def cmd_family(args) -> int:
    ks = args.k or [parse_ratio(s) for s in render.FAMILY_K]
    scene = render.SceneSpec(args.p, args.q, ks, _viewport(args), stroke_width=args.stroke, show_refs=args.refs)
    svg_path = args.svg or "family.svg"
    Path(svg_path).write_text(render.render_svg(scene))
    print(f"wrote {svg_path}")
    if args.png:
        render.render_png(scene, args.png)
        print(f"wrote {args.png}")
    return EXIT_OK


def cmd_verify(args) -> int:
    p, q, k = args.p, args.q, args.k
    shape = apollonian_set(p, q, k)
    reports = []
    if k != 1:
        reports.append(verify_filled(p, q, k, args.grid))
    reports.append(verify_curve(shape, p, q, k, grid=args.grid))
    for report in reports:
        print(report.summary(10))
    failed = [r for r in reports if not r.passed]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["check", "x1", "x2", "expected", "got"])
            for report in reports:
                for row in report.rows():
                    writer.writerow([report.label, *row])
    if args.png:
        worst = failed[0] if failed else reports[0]
        render.render_mismatch_map(worst, shape, _viewport(args), args.png)
    if args.svg:
        scene = render.SceneSpec(p, q, [k], _viewport(args), show_refs=args.refs)
        Path(args.svg).write_text(render.render_svg(scene))
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_affine(args) -> int:
    q = args.q if args.q is not None else Point(args.p.x1 + 1, args.p.x2)
    params = affine_sets.AffineParams(args.p, q, args.alpha, args.beta, args.gamma)
    pieces = affine_sets.affine_set(params)
    print(f"S(p={args.p}, q={q}; alpha={args.alpha}, beta={args.beta}, gamma={args.gamma})")
    for i, piece in pieces:
        print(f"R{i}: {affine_sets.describe_piece(piece)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    p, q = args.p, args.q
    if args.x is not None:
        regions = ",".join(str(i) for i in sorted(classify_region(args.x, p, q)))
        print(f"x: {args.x}\nregions: {regions}\nratio: {ratio(args.x, p, q)}")
        return EXIT_OK
    grid = args.grid or default_grid(p, q)
    samples = classify_grid(p, q, grid)
    fh = open(args.csv, "w", newline="") if args.csv else sys.stdout
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x1", "x2", "ratio", "regions"])
        for x, r in samples:
            regions = " ".join(str(i) for i in sorted(classify_region(x, p, q)))
            writer.writerow([str(x.x1), str(x.x2), str(r), regions])
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.png:
        render.render_ratio_map(samples, p, q, args.png)
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "family": cmd_family,
    "verify": cmd_verify,
    "affine": cmd_affine,
    "classify": cmd_classify,
}


_NEGATIVE_VALUE = re.compile(r"^-[0-9/]")


def _glue_negative_values(argv: List[str]) -> List[str]:
    """Rewrite ``--p -1,2`` as ``--p=-1,2``.

    argparse only recognises plain negative numbers as values, so a point or
    grid whose first coordinate is negative would otherwise read as a flag.
    """
    out: List[str] = []
    for tok in argv:
        if out and _NEGATIVE_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return COMMANDS[args.command](args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
