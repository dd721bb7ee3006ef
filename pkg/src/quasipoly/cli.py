"""Command line interface.

Exit codes separate mathematics from plumbing: 0 success, 1 negative
mathematical verdict (decide/verify false, inadmissible construction),
2 invalid input, 3 exhausted search or enumeration budgets.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .construct import construct_u_polygon_in_model_set, construct_u_polygon_ring
from .errors import BudgetExceeded, Inadmissible, SearchFailed
from .fields import admissible_by_divisibility, admissible_edge_numbers, divisibility_clause
from .formats import (
    FORMAT,
    PolygonFile,
    load_point_set,
    load_polygon,
    save_point_set,
    save_polygon,
    write_embedded_csv,
    write_xray_csv,
)
from .geometry import (
    affine_regularity_residual,
    alternate_vertex_split,
    consecutive_edge_cross_ratio_regular,
    darboux_iterate,
    edges_within_directions,
    is_u_polygon,
    random_convex_polygon,
    u_class,
    xray,
    xray_equal,
)
from .modelset import (
    BallWindow,
    BoxWindow,
    PRESETS,
    contains,
    generate,
    make_spec,
    preset_spec,
)
from .render import render_construction, render_point_set

MAX_INDEX = 10_000  # keeps totient factorization and tables trivial


def _parse_window(text: str):
    kind, _, rest = text.partition(":")
    if kind == "ball":
        return BallWindow(float(rest))
    if kind == "box":
        return BoxWindow(tuple(float(w) for w in rest.split(",")))
    raise ValueError(f"window must look like ball:R or box:w1,w2,..., got {text!r}")


def _check_index(n: int | None) -> int:
    if n is None:
        raise ValueError("--n is required without --preset")
    if not 1 <= n <= MAX_INDEX:
        raise ValueError(f"index n must be in [1, {MAX_INDEX}], got {n}")
    return n


def _spec_from_args(args):
    if getattr(args, "preset", None):
        return preset_spec(args.preset), f"{args.preset}-like"
    window = _parse_window(args.window) if getattr(args, "window", None) else None
    return make_spec(_check_index(args.n), window=window), None


def cmd_decide(args) -> int:
    n = _check_index(args.n)
    verdict = admissible_by_divisibility(n, args.m)
    clause = divisibility_clause(n, args.m)
    status = "EXISTS" if verdict else "NONE"
    print(f"U-polygon of class >= 4 with m={args.m} edges over Z[zeta_{n}]: {status}")
    if verdict:
        print(f"clause: {clause}")
    else:
        print("no clause of the divisibility condition holds")
    return 0 if verdict else 1


def cmd_admissible(args) -> int:
    print(json.dumps(admissible_edge_numbers(_check_index(args.n))))
    return 0


def cmd_generate(args) -> int:
    spec, label = _spec_from_args(args)
    ps = generate(spec, args.radius, budget=args.budget)
    save_point_set(ps, args.out, label=label)
    print(f"{len(ps.points)} points -> {args.out}")
    if args.csv:
        write_embedded_csv(ps, args.csv)
        print(f"embedded coordinates -> {args.csv}")
    if args.svg:
        render_point_set(ps, args.svg, title=label or f"Z[zeta_{spec.n}] patch")
        print(f"figure -> {args.svg}")
    return 0


def _render_with_patch(poly, dirs, spec, path, label) -> None:
    patch = None
    if spec is not None:
        extent = float(np.abs(poly.as_floats()).max()) * 1.15 + 2.0
        try:
            patch = generate(spec, extent)
        except BudgetExceeded:
            print("patch too large to render; drawing polygon only", file=sys.stderr)
    render_construction(poly, dirs, path, patch=patch, title=label)


def cmd_construct(args) -> int:
    in_model_set = bool(args.preset or args.window)
    if in_model_set:
        spec, label = _spec_from_args(args)
        poly, dirs, homothety = construct_u_polygon_in_model_set(
            spec, args.m, k_max=args.k_max, patch_radius=args.patch_radius,
            budget=args.budget,
        )
        print(
            f"constructed a U-polygon with {len(poly)} edges, class "
            f"{u_class(poly, dirs)}, contraction power k={homothety.k}"
        )
    else:
        spec, label, homothety = None, None, None
        poly, dirs = construct_u_polygon_ring(_check_index(args.n), args.m)
        print(
            f"constructed a U-polygon with {len(poly)} edges, class "
            f"{u_class(poly, dirs)} in Z[zeta_{args.n}]"
        )
    save_polygon(
        PolygonFile(polygon=poly, directions=dirs, homothety=homothety,
                    spec=spec, label=label),
        args.out,
    )
    print(f"polygon -> {args.out}")
    if args.svg:
        _render_with_patch(poly, dirs, spec, args.svg, label)
        print(f"figure -> {args.svg}")
    return 0


def cmd_verify(args) -> int:
    pf = load_polygon(args.infile)
    poly, dirs = pf.polygon, pf.directions
    verdict = is_u_polygon(poly, dirs)
    print(f"edges: {len(poly)}")
    print(f"directions: {len(dirs)}")
    print(f"is_u_polygon: {verdict}")
    if not verdict:
        return 1
    print(f"class: {u_class(poly, dirs)}")
    if pf.spec is not None:
        inside = all(contains(pf.spec, v) for v in poly.vertices)
        print(f"all vertices in model set: {inside}")
        if not inside:
            return 1
    return 0


def cmd_xray(args) -> int:
    pf = load_polygon(args.infile)
    poly, dirs = pf.polygon, pf.directions
    out_dir = Path(args.out_dir) if args.out_dir else Path(args.infile).parent
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.infile).stem
    points = list(poly.vertices)
    for i, u in enumerate(dirs):
        table = xray(points, u)
        path = out_dir / f"{stem}_xray_{i:02d}.csv"
        write_xray_csv(table, path)
        print(f"direction {math.degrees(u.angle):7.2f} deg: "
              f"{len(table.lines)} lines -> {path}")
    if len(poly) % 2 == 0:
        evens, odds = alternate_vertex_split(poly)
        equal = xray_equal(evens, odds, dirs)
        print(f"alternate-split X-rays equal in all directions: {equal}")
        if not equal and is_u_polygon(poly, dirs):
            print(
                "FALSIFIED EXPECTATION: alternate vertex classes of a "
                "U-polygon must have identical X-rays in every direction of U",
                file=sys.stderr,
            )
            return 1
    return 0


def cmd_darboux(args) -> int:
    dirs = None
    if args.poly:
        pf = load_polygon(args.poly)
        start = pf.polygon.as_floats()
        dirs = pf.directions
    else:
        rng = np.random.default_rng(args.seed)
        start = random_convex_polygon(args.ngon, rng)
    history = darboux_iterate(start, args.iters, keep_history=True)
    for j, snap in enumerate(history):
        line = f"double-step {j:3d}: affine regularity residual {affine_regularity_residual(snap):.3e}"
        if dirs is not None:
            line += f", edges within directions: {edges_within_directions(snap, dirs, args.tolerance)}"
        print(line)
    return 0


def cmd_crossratio(args) -> int:
    q = consecutive_edge_cross_ratio_regular(args.m)
    identity = q / (q - 1.0) - 2.0
    target = 2.0 * math.cos(4.0 * math.pi / args.m)
    print(f"q = {q!r}")
    print(f"q/(q-1) - 2 = {identity!r}")
    print(f"2 cos(4 pi / m) = {target!r}")
    print(f"identity holds to {abs(identity - target):.3e}")
    return 0


def cmd_render(args) -> int:
    if args.poly:
        pf = load_polygon(args.poly)
        _render_with_patch(pf.polygon, pf.directions, pf.spec, args.out, pf.label)
    elif args.points:
        ps = load_point_set(args.points)
        render_point_set(ps, args.out)
    else:
        raise ValueError("render needs --poly or --points")
    print(f"figure -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasipoly",
        description="Decide, construct, and verify U-polygons of class >= 4 "
                    "in planar cyclotomic model sets.",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"quasipoly {__version__} (format {FORMAT})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether m edges are admissible for index n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("admissible", help="list all admissible edge counts for index n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("generate", help="generate a model set patch")
    p.add_argument("--n", type=int)
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--window", help="ball:R or box:w1,w2,...")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv")
    p.add_argument("--svg")
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("construct", help="construct a verified U-polygon")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--window", help="embed into a model set with this window")
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.add_argument("--k-max", type=int, default=25)
    p.add_argument("--patch-radius", type=float, default=12.0)
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a polygon file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("xray", help="X-ray tables and the alternate-split check")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_xray)

    p = sub.add_parser("darboux", help="rescaled midpoint iteration trace")
    p.add_argument("--poly", help="polygon file to start from")
    p.add_argument("--ngon", type=int, default=8, help="random convex n-gon size")
    p.add_argument("--iters", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-9,
                   help="angular tolerance for direction membership")
    p.set_defaults(func=cmd_darboux)

    p = sub.add_parser("crossratio", help="closed-form consecutive-edge cross ratio")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_crossratio)

    p = sub.add_parser("render", help="render a point set or polygon file")
    p.add_argument("--points")
    p.add_argument("--poly")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Inadmissible as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 1
    except (BudgetExceeded, SearchFailed) as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
