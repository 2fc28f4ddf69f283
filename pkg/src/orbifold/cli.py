"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad signature, non-planar code,
malformed mesh, ...), 2 usage error.  ``--json`` switches machine-readable
output on for the commands that support it.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import euler, hyperbolic, knots, notation, polyhedron, projection

__all__ = ["main", "build_parser"]


def _print_json(obj) -> None:
    print(json.dumps(obj))


def _classify_payload(text: str) -> dict:
    sig = notation.parse(text)
    chi = euler.euler_characteristic(sig)
    geo = euler.classify(sig)
    name = euler.conway_name(sig)
    return {
        "chi": {"num": chi.numerator, "den": chi.denominator},
        "class": geo.kind,
        "order": geo.order,
        "name": name.full if name else None,
    }


def _cmd_classify(args) -> int:
    sig = notation.parse(args.signature)
    chi = euler.euler_characteristic(sig)
    geo = euler.classify(sig)
    name = euler.conway_name(sig)
    if args.json:
        _print_json(_classify_payload(args.signature))
        return 0
    parts = [f"chi={chi}", geo.kind]
    if geo.order is not None:
        parts.append(f"order={geo.order}")
    if name is not None:
        parts.append(name.full)
    print(" ".join(parts))
    return 0


def _cmd_name(args) -> int:
    sig = notation.parse(args.signature)
    name = euler.conway_name(sig)
    if name is None:
        raise ValueError(f"{args.signature!r} is not one of the 17 plane signatures")
    if args.json:
        _print_json({"signature": notation.to_string(sig), "name": name.full})
    else:
        print(name.full)
    return 0


def _cmd_enumerate(args) -> int:
    if args.geometry_class == "euclidean":
        sigs = euler.enumerate_euclidean()
    elif args.geometry_class == "spherical":
        if args.max_order is None:
            raise ValueError("spherical enumeration needs --max-order")
        sigs = euler.enumerate_spherical(args.max_order)
    else:
        if args.chi_min is None or args.chi_max is None or args.max_order is None:
            raise ValueError("hyperbolic enumeration needs --chi-min, --chi-max, --max-order")
        sigs = euler.enumerate_by_chi(
            Fraction(args.chi_min), Fraction(args.chi_max), args.max_order
        )
    texts = sorted(notation.to_string(s) for s in sigs)
    if args.json:
        _print_json({"class": args.geometry_class, "count": len(texts), "signatures": texts})
    else:
        for t in texts:
            print(t)
    return 0


def _cmd_poly_report(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        surface = polyhedron.load_off(fh.read())
    report = polyhedron.total_defect(surface)
    if args.json:
        _print_json(
            {
                "V": surface.vertex_count,
                "E": surface.edge_count,
                "F": surface.face_count,
                "chi": report.euler,
                "total_defect": report.total,
            }
        )
    else:
        print(
            f"V={surface.vertex_count} E={surface.edge_count} F={surface.face_count} "
            f"chi={report.euler} total_defect={report.total!r} "
            f"expected={report.expected_total!r} discrepancy={report.discrepancy:.3e}"
        )
    return 0


def _cmd_poly_dual(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        surface = polyhedron.load_off(fh.read())
    text = polyhedron.dump_off(polyhedron.dual_map(surface))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_project_circle(args) -> int:
    cut = projection.PlaneCut(args.a, args.b, args.c, args.d)
    image = projection.image_of_cut(cut)
    if isinstance(image, projection.ProjectedCircle):
        if args.json:
            _print_json(
                {
                    "kind": "circle",
                    "center": [image.center.x, image.center.y],
                    "radius": image.radius,
                }
            )
        else:
            print(f"circle center=({image.center.x!r}, {image.center.y!r}) radius={image.radius!r}")
    else:
        if args.json:
            _print_json({"kind": "line", "a": image.a, "b": image.b, "c": image.c})
        else:
            print(f"line {image.a!r}*x + {image.b!r}*y + {image.c!r} = 0")
    return 0


def _cmd_hyp_distance(args) -> int:
    a = hyperbolic.UhpPoint(args.x1, args.y1)
    b = hyperbolic.UhpPoint(args.x2, args.y2)
    d = hyperbolic.distance(a, b)
    if args.json:
        _print_json({"distance": d})
    else:
        print(repr(d))
    return 0


def _cmd_hyp_tile(args) -> int:
    tiles = hyperbolic.triangle_tiling(args.p, args.q, args.r, args.depth)
    svg = hyperbolic.render_tiling_svg(tiles)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        print(svg)
    return 0


def _cmd_knot_validate(args) -> int:
    code = knots.parse_code(args.code)
    f = knots.validate(code)
    if args.json:
        _print_json({"valid": True, "crossings": code.n, "faces": f})
    else:
        print(f"valid: {code.n} crossings, {f} faces")
    return 0


def _cmd_knot_diagrams(args) -> int:
    code = knots.parse_code(args.code)
    diagrams = knots.all_diagrams(code)
    if args.json:
        _print_json({"count": len(diagrams), "diagrams": [str(d) for d in diagrams]})
    else:
        for d in diagrams:
            print(d)
    return 0


def _cmd_knot_alternating(args) -> int:
    code = knots.parse_code(args.code)
    pair = knots.alternating_diagrams(code)
    if args.json:
        _print_json({"diagrams": [str(d) for d in pair]})
    else:
        for d in pair:
            print(d)
    return 0


def _cmd_knot_color(args) -> int:
    code = knots.parse_code(args.code)
    pair = knots.checkerboard(code)
    if args.json:
        _print_json(
            {
                "faces": len(pair[0].faces),
                "colorings": [list(c.colors) for c in pair],
            }
        )
    else:
        for coloring in pair:
            print(",".join(coloring.colors))
    return 0


def _cmd_knot_tricolor(args) -> int:
    diagram = knots.parse_diagram(args.diagram)
    count = knots.tricolor_count(diagram)
    if args.json:
        _print_json({"tricolor_count": count})
    else:
        print(count)
    return 0


def _cmd_serve(args) -> int:
    from . import service

    service.serve(port=args.port, host=args.host, allowed_origins=args.allow_origin or None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbifold", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="geometry class and name of a signature")
    p.add_argument("signature")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("name", help="traditional name of one of the 17 plane signatures")
    p.add_argument("signature")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_name)

    p = sub.add_parser("enumerate", help="list signatures of a geometry class")
    p.add_argument("--class", dest="geometry_class", required=True,
                   choices=("euclidean", "spherical", "hyperbolic"))
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--chi-min", default=None, help="rational like -1/2")
    p.add_argument("--chi-max", default=None, help="rational like -1/12")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    poly = sub.add_parser("poly", help="polyhedral mesh tools")
    poly_sub = poly.add_subparsers(dest="poly_command", required=True)
    p = poly_sub.add_parser("report", help="angle-defect report for an OFF mesh")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_poly_report)
    p = poly_sub.add_parser("dual", help="dual mesh of an OFF mesh, as OFF")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_poly_dual)

    proj = sub.add_parser("project", help="stereographic projection tools")
    proj_sub = proj.add_subparsers(dest="project_command", required=True)
    p = proj_sub.add_parser("circle", help="planar image of the sphere cut a x + b y + c z + d = 0")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("c", type=float)
    p.add_argument("d", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_project_circle)

    hyp = sub.add_parser("hyp", help="hyperbolic geometry tools")
    hyp_sub = hyp.add_subparsers(dest="hyp_command", required=True)
    p = hyp_sub.add_parser("distance", help="distance between two upper-half-plane points")
    p.add_argument("x1", type=float)
    p.add_argument("y1", type=float)
    p.add_argument("x2", type=float)
    p.add_argument("y2", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hyp_distance)
    p = hyp_sub.add_parser("tile", help="SVG of a (p,q,r) triangle tiling")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)
    p.add_argument("depth", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_hyp_tile)

    knot = sub.add_parser("knot", help="crossing-code tools")
    knot_sub = knot.add_subparsers(dest="knot_command", required=True)
    p = knot_sub.add_parser("validate", help="planarity check of a signed crossing code")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_knot_validate)
    p = knot_sub.add_parser("diagrams", help="all over/under assignments")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_knot_diagrams)
    p = knot_sub.add_parser("alternating", help="the two alternating assignments")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_knot_alternating)
    p = knot_sub.add_parser("color", help="the two checkerboard face colorings")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_knot_color)
    p = knot_sub.add_parser("tricolor", help="3-coloring count of a diagram (code /O1,U2,...)")
    p.add_argument("diagram")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_knot_tricolor)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--allow-origin", action="append", default=None,
                   help="restrict CORS to this origin (repeatable)")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
