"""Drop a few strokes into a unit cell and let a wallpaper group repeat
them across the viewport — the engine behind the drawing UI.

Run:  python3 demos/wallpaper_doodle.py [output.svg]
"""

import sys

from orbifold import isometry


def to_svg(strokes, view, size=480) -> str:
    sx = size / (view.xmax - view.xmin)
    sy = size / (view.ymax - view.ymin)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for stroke in strokes:
        pts = " ".join(
            f"{(x - view.xmin) * sx:.2f},{(size - (y - view.ymin) * sy):.2f}"
            for x, y in stroke
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="black" '
            f'stroke-width="2" stroke-linecap="round"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def main() -> None:
    # a little flag-like squiggle inside the unit cell
    doodle = [
        [(0.2, 0.2), (0.2, 0.45)],
        [(0.2, 0.45), (0.38, 0.4), (0.2, 0.32)],
    ]
    view = isometry.Viewport(0.0, 0.0, 3.0, 3.0)

    print("One squiggle, three symmetry flavors")
    print("-" * 64)
    for sig in ("2222", "*442", "632"):
        group = isometry.group_for(sig)
        copies = isometry.replicate(group, doodle, view)
        print(f"  {sig:>5}: {len(copies)} stroke images across a 3x3 window")
    print()

    group = isometry.group_for("*442")
    copies = isometry.replicate(group, doodle, view)
    out = sys.argv[1] if len(sys.argv) > 1 else "wallpaper_doodle.svg"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(to_svg(copies, view))
    print(f"Kaleidoscope sheet for *442 written to {out}")
    print("(serve the HTTP API and open the doodle UI for the live version)")


if __name__ == "__main__":
    main()
