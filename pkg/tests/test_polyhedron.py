"""Polyhedral surfaces: defects, total curvature, duals, OFF files."""

import math
import time

import numpy as np
import pytest

from orbifold.polyhedron import (
    BUILTIN_NAMES,
    MeshError,
    PolyhedralSurface,
    angle_defect,
    builtin,
    dual_map,
    dump_off,
    euler_number,
    face_angle_sum,
    face_normal,
    gauss_image_area,
    load_off,
    surface_from_convex_hull,
    torus_grid,
    total_defect,
    vertex_ring,
)

TAU = 2.0 * math.pi

BUILTIN_COUNTS = {
    "tetrahedron": (4, 6, 4),
    "cube": (8, 12, 6),
    "octahedron": (6, 12, 8),
    "dodecahedron": (20, 30, 12),
    "icosahedron": (12, 30, 20),
}

BUILTIN_VERTEX_DEFECT = {
    "tetrahedron": math.pi,
    "cube": math.pi / 2,
    "octahedron": 2 * math.pi / 3,
    "dodecahedron": math.pi / 5,
    "icosahedron": math.pi / 3,
}


def test_builtin_names_and_counts():
    assert tuple(sorted(BUILTIN_NAMES)) == BUILTIN_NAMES
    assert set(BUILTIN_NAMES) == set(BUILTIN_COUNTS)
    for name, (v, e, f) in BUILTIN_COUNTS.items():
        s = builtin(name)
        assert (s.vertex_count, s.edge_count, s.face_count) == (v, e, f)
        assert euler_number(s) == 2
    with pytest.raises(ValueError):
        builtin("teapot")


def test_builtin_total_defect_is_two_full_turns():
    for name in BUILTIN_NAMES:
        report = total_defect(builtin(name))
        assert report.euler == 2
        assert abs(report.expected_total - 2 * TAU) < 1e-15
        assert abs(report.total - 2 * TAU) < 1e-9
        assert report.discrepancy < 1e-9
        assert len(report.vertex_defects) == builtin(name).vertex_count


def test_builtin_vertex_defects_match_the_regular_values():
    for name, expected in BUILTIN_VERTEX_DEFECT.items():
        s = builtin(name)
        for v in range(s.vertex_count):
            assert abs(angle_defect(s, v) - expected) < 1e-12, name


def test_cube_corner_defect_is_a_quarter_turn():
    s = builtin("cube")
    for v in range(8):
        assert abs(angle_defect(s, v) - math.pi / 2) < 1e-12


def test_spherical_image_equals_defect_on_convex_vertices():
    for name in BUILTIN_NAMES:
        s = builtin(name)
        for v in range(s.vertex_count):
            assert abs(gauss_image_area(s, v) - angle_defect(s, v)) < 1e-6, name


def test_spherical_image_rejects_saddle_vertices():
    t = torus_grid(4, 4)
    defects = total_defect(t).vertex_defects
    saddles = [v for v, d in enumerate(defects) if d < -0.1]
    bulges = [v for v, d in enumerate(defects) if d > 0.1]
    assert saddles and bulges
    for v in saddles:
        with pytest.raises(MeshError):
            gauss_image_area(t, v)
    for v in bulges:  # the outer equator is locally convex
        assert abs(gauss_image_area(t, v) - defects[v]) < 1e-9


def test_random_convex_hulls_close_the_curvature_budget():
    rng = np.random.default_rng(20260819)
    start = time.perf_counter()
    for _ in range(100):
        n = int(rng.integers(4, 61))
        pts = rng.normal(size=(n, 3))
        if rng.random() < 0.3:
            pts /= np.linalg.norm(pts, axis=1, keepdims=True)  # on a sphere
        s = surface_from_convex_hull(pts)
        report = total_defect(s)
        assert report.euler == 2
        assert report.discrepancy < 1e-6
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0


def test_hull_merges_coplanar_facets():
    # Surface-grid samples of a cube: non-corner samples sit inside facets
    # and must disappear into six square faces.
    grid = np.array(
        [
            [x, y, z]
            for x in (0.0, 0.5, 1.0)
            for y in (0.0, 0.5, 1.0)
            for z in (0.0, 0.5, 1.0)
            if not (x == 0.5 and y == 0.5 and z == 0.5)
        ]
    )
    s = surface_from_convex_hull(grid)
    assert (s.vertex_count, s.edge_count, s.face_count) == (8, 12, 6)
    assert sorted(len(f) for f in s.faces) == [4] * 6
    assert total_defect(s).discrepancy < 1e-9


def test_hull_rejects_degenerate_input():
    flat = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]], dtype=float)
    with pytest.raises((MeshError, Exception)):
        surface_from_convex_hull(flat)


def test_torus_grid_is_flat_on_average():
    for nu, nv in ((4, 4), (3, 5), (6, 3)):
        t = torus_grid(nu, nv)
        assert (t.vertex_count, t.edge_count, t.face_count) == (
            nu * nv,
            2 * nu * nv,
            nu * nv,
        )
        assert euler_number(t) == 0
        report = total_defect(t)
        assert report.euler == 0
        assert report.expected_total == 0.0
        assert abs(report.total) < 1e-6
        # ... while individual vertices are genuinely curved
        assert max(abs(d) for d in report.vertex_defects) > 0.1


def test_torus_grid_validation():
    with pytest.raises(ValueError):
        torus_grid(2, 5)
    with pytest.raises(ValueError):
        torus_grid(4, 4, R=1.0, r=1.5)  # self-intersecting radii


def test_dual_swaps_vertices_and_faces():
    for name in BUILTIN_NAMES:
        s = builtin(name)
        d = dual_map(s)
        assert d.vertex_count == s.face_count
        assert d.face_count == s.vertex_count
        assert d.edge_count == s.edge_count
        assert euler_number(d) == 2
        assert total_defect(d).discrepancy < 1e-9


def test_dual_of_dual_restores_the_combinatorics():
    for name in BUILTIN_NAMES:
        s = builtin(name)
        dd = dual_map(dual_map(s))
        assert (dd.vertex_count, dd.edge_count, dd.face_count) == (
            s.vertex_count,
            s.edge_count,
            s.face_count,
        )
        assert sorted(map(len, dd.faces)) == sorted(map(len, s.faces))
        degrees = lambda surf: sorted(
            len(vertex_ring(surf, v)) for v in range(surf.vertex_count)
        )
        assert degrees(dd) == degrees(s)


def test_dual_pairs():
    assert dual_map(builtin("cube")).face_count == 8  # octahedral
    assert dual_map(builtin("octahedron")).face_count == 6
    assert dual_map(builtin("dodecahedron")).face_count == 20
    assert dual_map(builtin("tetrahedron")).face_count == 4  # self-dual


def test_face_helpers():
    s = builtin("cube")
    assert abs(face_angle_sum(s, 0) - TAU) < 1e-12  # four right angles
    tet = builtin("tetrahedron")
    assert abs(face_angle_sum(tet, 0) - math.pi) < 1e-12
    centroid = s.vertices.mean(axis=0)
    for fi, face in enumerate(s.faces):
        n = face_normal(s, fi)
        assert abs(np.linalg.norm(n) - 1.0) < 1e-12
        face_center = s.vertices[list(face)].mean(axis=0)
        assert np.dot(n, face_center - centroid) > 0.0  # outward


def test_vertex_ring_is_the_face_cycle():
    s = builtin("cube")
    for v in range(s.vertex_count):
        ring = vertex_ring(s, v)
        assert len(ring) == 3
        assert all(v in s.faces[fi] for fi in ring)
    ico = builtin("icosahedron")
    assert all(len(vertex_ring(ico, v)) == 5 for v in range(12))


# -- OFF files ---------------------------------------------------------------


def test_off_round_trip():
    for name in BUILTIN_NAMES:
        s = builtin(name)
        text = dump_off(s)
        again = load_off(text)
        assert np.array_equal(again.vertices, s.vertices)
        assert again.faces == s.faces
    assert load_off(dump_off(s).encode()).faces == s.faces  # bytes accepted


def test_off_accepts_comments_and_blank_lines():
    text = """OFF # header
    # a comment line
    4 4 6

    0 0 0
    1 0 0
    0 1 0
    0 0 1
    3 0 2 1
    3 0 1 3
    3 0 3 2
    3 1 2 3
    """
    s = load_off(text)
    assert (s.vertex_count, s.face_count) == (4, 4)
    assert euler_number(s) == 2


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "NOFF 1 1 1",
        "OFF 4 4",  # truncated counts
        "OFF 2 0 0 0 0 0 1 1 1",  # no faces -> every edge fails closure
        "OFF 1 1 3 0 0 0 3 0 0 0",  # face repeats a vertex
        "OFF 4 4 6 0 0 0 1 0 0 0 1 0 0 0 1 3 0 2 1 3 0 1 3 3 0 3 2 3 1 2 3 9",
    ],
)
def test_off_rejects_malformed(bad):
    with pytest.raises(MeshError):
        load_off(bad)


# -- mesh validation ---------------------------------------------------------


def test_open_mesh_is_rejected():
    cube = builtin("cube")
    with pytest.raises(MeshError, match="not closed"):
        PolyhedralSurface(cube.vertices, cube.faces[:-1])


def test_flipped_face_is_rejected():
    cube = builtin("cube")
    flipped = cube.faces[:-1] + (tuple(reversed(cube.faces[-1])),)
    with pytest.raises(MeshError, match="oriented"):
        PolyhedralSurface(cube.vertices, flipped)


def test_degenerate_faces_are_rejected():
    tet = builtin("tetrahedron")
    with pytest.raises(MeshError):
        PolyhedralSurface(tet.vertices, tet.faces[:-1] + ((0, 1),))
    with pytest.raises(MeshError):
        PolyhedralSurface(tet.vertices, tet.faces[:-1] + ((0, 1, 1),))
    with pytest.raises(MeshError):
        PolyhedralSurface(tet.vertices, tet.faces[:-1] + ((0, 1, 9),))


def test_non_finite_vertices_are_rejected():
    tet = builtin("tetrahedron")
    verts = tet.vertices.copy()
    verts[0, 0] = math.nan
    with pytest.raises(MeshError):
        PolyhedralSurface(verts, tet.faces)
