"""Tour the small knots: trace faces, flip crossings, color regions and
arcs, and count three-colorings.

Run:  python3 demos/knot_tour.py
"""

from orbifold import knots


def main() -> None:
    trefoil_code = knots.parse_code("1+ 2+ 3+ 1+ 2+ 3+")
    print("Trefoil curve: 1+ 2+ 3+ 1+ 2+ 3+")
    print("-" * 64)
    face_list = knots.faces(trefoil_code)
    print(f"  crossings = 3, faces = {len(face_list)} "
          f"(sizes {sorted(len(f) for f in face_list)}), "
          f"so V - E + F = {3 - 6 + len(face_list)}")
    print(f"  every 3-crossing curve closes up on the sphere this way.")
    print()

    print("All over/under assignments, flagged by their properties")
    alternating = set(map(str, knots.alternating_diagrams(trefoil_code)))
    for diagram in knots.all_diagrams(trefoil_code):
        text = str(diagram)
        tags = []
        if text in alternating:
            tags.append("alternating")
        if knots.tricolor_count(diagram) > 3:
            tags.append(f"tricolor x{knots.tricolor_count(diagram)}")
        print(f"  {text:<34} {' '.join(tags)}")
    print()

    print("Checkerboard: the two proper black/white region colorings")
    black, white = knots.checkerboard(trefoil_code)
    print(f"  {','.join(black.colors)}")
    print(f"  {','.join(white.colors)}")
    print()

    print("The catalog of small knots")
    print("-" * 64)
    for entry in knots.catalog():
        diagram, _ = knots.alternating_diagrams(entry.code)
        tric = knots.tricolor_count(diagram)
        marker = "  <- three-colorable!" if tric > 3 else ""
        print(f"  {entry.name:>4}: {entry.crossings} crossings, "
              f"tricolor count {tric}{marker}")
    print()

    fig8 = knots.parse_diagram("1+ 2- 3- 1+ 4+ 3- 2- 4+ /O1,U2,O3,U4")
    print("Figure-eight mirror test")
    print(f"  original: {fig8}")
    print(f"  mirrored: {knots.mirror(fig8)}")
    print(f"  tricolor counts agree: "
          f"{knots.tricolor_count(fig8)} == "
          f"{knots.tricolor_count(knots.mirror(fig8))}")


if __name__ == "__main__":
    main()
