"""Distances that defy the ruler, infinitely many parallels, and a (2,3,7)
triangle tiling rendered to an SVG postcard.

Run:  python3 demos/hyperbolic_postcard.py [output.svg]
"""

import math
import sys

from orbifold import hyperbolic


def main() -> None:
    P = hyperbolic.UhpPoint
    print("Upper half-plane distances (the ruler shrinks near the floor)")
    print("-" * 64)
    pairs = [(P(0, 4), P(0, 8)), (P(0, 8), P(0, 16)), (P(0, 1), P(0, 1024))]
    for a, b in pairs:
        d = hyperbolic.distance(a, b)
        print(f"  d(({a.x},{a.y:>4}) -> ({b.x},{b.y:>4})) = {d:.12f}")
    print(f"  ln 2 = {math.log(2):.12f}; the doubling ladder climbs in "
          f"equal steps.")
    print()

    print("Both models agree after the transfer map")
    a, b = P(-1, 1), P(1, 1)
    d_uhp = hyperbolic.distance(a, b)
    d_disk = hyperbolic.disk_distance(
        hyperbolic.uhp_to_disk(a), hyperbolic.uhp_to_disk(b)
    )
    print(f"  half-plane: {d_uhp:.12f}")
    print(f"  unit disk:  {d_disk:.12f}")
    print(f"  2 ln(1+sqrt 2) = {2 * math.log(1 + math.sqrt(2)):.12f}")
    print()

    print("Through one point, many lines missing a given line")
    line = hyperbolic.Semicircle(0.0, 1.0)
    p = P(0.0, 3.0)
    for i, parallel in enumerate(hyperbolic.disjoint_parallels(line, p, 3)):
        print(f"  parallel {i + 1}: {parallel}")
    print()

    tiles = hyperbolic.triangle_tiling(2, 3, 7, 4)
    print(f"(2,3,7) triangle tiling, depth 4: {len(tiles)} congruent tiles")
    sides = sorted(hyperbolic.triangle_side_lengths(tiles[0]))
    print(f"  side lengths of every tile: {sides[0]:.6f}, {sides[1]:.6f}, "
          f"{sides[2]:.6f}")
    out = sys.argv[1] if len(sys.argv) > 1 else "hyperbolic_postcard.svg"
    svg = hyperbolic.render_tiling_svg(tiles, size=600)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"  wrote {out}")


if __name__ == "__main__":
    main()
