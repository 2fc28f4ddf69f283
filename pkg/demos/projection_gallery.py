"""Project the sphere onto the plane from its north pole and watch circles
stay circles (or straighten into lines) while angles survive untouched.

Run:  python3 demos/projection_gallery.py
"""

import math

import numpy as np

from orbifold import projection


def describe(image) -> str:
    if isinstance(image, projection.ProjectedCircle):
        return (f"circle, center ({image.center.x:+.6f}, {image.center.y:+.6f}),"
                f" radius {image.radius:.6f}")
    return f"line, {image.a:+.4f}*x {image.b:+.4f}*y {image.c:+.4f} = 0"


def main() -> None:
    print("Images of planar cuts of the unit sphere")
    print("-" * 64)
    cuts = [
        ("equator", projection.PlaneCut(0, 0, 1, 0)),
        ("tropic at z = 1/2", projection.PlaneCut(0, 0, 1, -0.5)),
        ("tilted cut", projection.PlaneCut(0.6, 0, 0.8, -0.2)),
        ("cut through the pole", projection.PlaneCut(1, 0, 1, -1)),
    ]
    for label, cut in cuts:
        print(f"  {label:>22}: {describe(projection.image_of_cut(cut))}")
    print()

    print("Sample points projected from a tilted cut land on its image")
    cut = projection.PlaneCut(0.6, 0, 0.8, -0.2)
    image = projection.image_of_cut(cut)
    for sphere_point in projection.cut_points(cut, 4):
        q = projection.project(sphere_point)
        r = math.hypot(q.x - image.center.x, q.y - image.center.y)
        print(f"  ({q.x:+.4f}, {q.y:+.4f})  distance to center = {r:.12f}")
    print()

    print("Angles between tangent directions are preserved")
    p = projection.SpherePoint.normalize(0.3, -0.5, 0.4)
    u1 = np.array([1.0, 0.2, 0.0])
    u2 = np.array([0.0, 1.0, -0.3])
    v = np.array([p.x, p.y, p.z])
    u1 -= np.dot(u1, v) * v
    u2 -= np.dot(u2, v) * v
    w1 = projection.project_tangent(p, u1)
    w2 = projection.project_tangent(p, u2)
    cos_sphere = float(np.dot(u1, u2) / (np.linalg.norm(u1) * np.linalg.norm(u2)))
    cos_plane = float(np.dot(w1, w2) / (np.linalg.norm(w1) * np.linalg.norm(w2)))
    print(f"  on the sphere: cos(angle) = {cos_sphere:.15f}")
    print(f"  in the plane:  cos(angle) = {cos_plane:.15f}")
    print()

    print("Area of a spherical triangle = angle sum - pi (unit sphere)")
    a = projection.SpherePoint(1, 0, 0)
    b = projection.SpherePoint(0, 1, 0)
    c = projection.SpherePoint(0, 0, 1)
    area = projection.spherical_triangle_area(a, b, c)
    print(f"  octant triangle: area = {area:.12f}  (pi/2 = {math.pi/2:.12f})")


if __name__ == "__main__":
    main()
