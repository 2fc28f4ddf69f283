"""Angle defects on closed meshes: the five regular solids always total
4*pi, a random convex hull does too, and a polyhedral torus cancels to zero.

Run:  python3 demos/descartes_walkthrough.py
"""

import math

import numpy as np

from orbifold import polyhedron


def main() -> None:
    print("Total angle defect = 2*pi * (V - E + F)")
    print("-" * 64)
    for name in polyhedron.BUILTIN_NAMES:
        mesh = polyhedron.builtin(name)
        report = polyhedron.total_defect(mesh)
        per_vertex = report.vertex_defects[0] / math.pi
        print(
            f"  {name:>12}: V={mesh.vertex_count:>3} E={mesh.edge_count:>3} "
            f"F={mesh.face_count:>3}  defect/vertex = {per_vertex:.4f}*pi  "
            f"total = {report.total / math.pi:.6f}*pi"
        )
    print()

    rng = np.random.default_rng(7)
    pts = rng.normal(size=(40, 3))
    hull = polyhedron.surface_from_convex_hull(pts)
    report = polyhedron.total_defect(hull)
    print(f"Random 40-point convex hull: V={hull.vertex_count} "
          f"E={hull.edge_count} F={hull.face_count}")
    print(f"  total defect   = {report.total:.12f}")
    print(f"  expected 4*pi  = {report.expected_total:.12f}")
    print(f"  discrepancy    = {report.discrepancy:.3e}")
    print()

    torus = polyhedron.torus_grid(8, 8)
    report = polyhedron.total_defect(torus)
    print(f"8x8 torus grid: V={torus.vertex_count} E={torus.edge_count} "
          f"F={torus.face_count}  (V - E + F = {report.euler})")
    print(f"  positive defects on the outer rim, negative in the hole,")
    print(f"  total = {report.total:.3e}  -- everything cancels.")
    print()

    cube = polyhedron.builtin("cube")
    print("At a convex corner the unit normals sweep a spherical patch")
    print("whose area repeats the defect exactly:")
    for v in (0, 3):
        defect = polyhedron.angle_defect(cube, v)
        gauss = polyhedron.gauss_image_area(cube, v)
        print(f"  cube vertex {v}: defect = {defect:.12f}, "
              f"normal-sweep area = {gauss:.12f}")


if __name__ == "__main__":
    main()
