"""Closed polyhedral surfaces: Euler number, angle defects, Gauss images, duals.

Surfaces are oriented 2-manifold meshes: every directed edge appears in
exactly one face, every undirected edge in exactly two.  Angle defect at a
vertex is 2*pi minus the incident face angles; summed over a closed surface
it equals 2*pi*(V - E + F).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import ConvexHull

__all__ = [
    "MeshError",
    "PolyhedralSurface",
    "DefectReport",
    "load_off",
    "dump_off",
    "euler_number",
    "angle_defect",
    "total_defect",
    "gauss_image_area",
    "dual_map",
    "builtin",
    "BUILTIN_NAMES",
    "surface_from_convex_hull",
    "torus_grid",
    "face_angle_sum",
    "face_normal",
    "vertex_ring",
]


class MeshError(ValueError):
    """Raised for meshes that are not closed oriented surfaces."""


@dataclass(frozen=True, eq=False)
class PolyhedralSurface:
    """Vertex coordinates plus faces as cyclic vertex-index tuples."""

    vertices: np.ndarray
    faces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        verts = np.asarray(self.vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 3:
            raise MeshError("vertices must be an (n, 3) array")
        if not np.isfinite(verts).all():
            raise MeshError("vertex coordinates must be finite")
        object.__setattr__(self, "vertices", verts)
        faces = tuple(tuple(int(i) for i in f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        n = len(verts)
        directed: dict[tuple[int, int], int] = {}
        for fi, face in enumerate(faces):
            if len(face) < 3:
                raise MeshError(f"face {fi} has fewer than 3 vertices")
            if len(set(face)) != len(face):
                raise MeshError(f"face {fi} repeats a vertex: {face}")
            for a, b in _cycle_pairs(face):
                if not (0 <= a < n):
                    raise MeshError(f"face {fi} references missing vertex {a}")
                if (a, b) in directed:
                    raise MeshError(f"directed edge {a}->{b} appears twice; mesh is not consistently oriented")
                directed[(a, b)] = fi
        for (a, b) in directed:
            if (b, a) not in directed:
                raise MeshError(f"edge {a}-{b} is not shared by two faces; mesh is not closed")
        if not faces:
            raise MeshError("mesh has no faces")
        used = {i for f in faces for i in f}
        if len(used) != n:
            missing = min(set(range(n)) - used)
            raise MeshError(f"vertex {missing} belongs to no face")
        object.__setattr__(self, "_edge_face", directed)

    # -- derived counts --

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edge_face) // 2

    @property
    def face_count(self) -> int:
        return len(self.faces)


def _cycle_pairs(face: Sequence[int]) -> Iterable[tuple[int, int]]:
    for i in range(len(face)):
        yield face[i], face[(i + 1) % len(face)]


def euler_number(surface: PolyhedralSurface) -> int:
    """V - E + F."""
    return surface.vertex_count - surface.edge_count + surface.face_count


def _corner_angle(verts: np.ndarray, prev: int, at: int, nxt: int) -> float:
    u = verts[prev] - verts[at]
    v = verts[nxt] - verts[at]
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu < 1e-15 or nv < 1e-15:
        raise MeshError(f"degenerate corner at vertex {at}")
    c = float(np.dot(u, v) / (nu * nv))
    return math.acos(max(-1.0, min(1.0, c)))


def angle_defect(surface: PolyhedralSurface, vertex: int) -> float:
    """2*pi minus the sum of incident face angles at the vertex."""
    total = 0.0
    found = False
    for face in surface.faces:
        for i, v in enumerate(face):
            if v == vertex:
                found = True
                total += _corner_angle(surface.vertices, face[i - 1], v, face[(i + 1) % len(face)])
    if not found:
        raise MeshError(f"vertex {vertex} belongs to no face")
    return 2.0 * math.pi - total


@dataclass(frozen=True)
class DefectReport:
    """Per-vertex angle defects and their sum, with the Euler-number check."""

    vertex_defects: tuple[float, ...]
    total: float
    euler: int

    @property
    def expected_total(self) -> float:
        return 2.0 * math.pi * self.euler

    @property
    def discrepancy(self) -> float:
        return abs(self.total - self.expected_total)


def total_defect(surface: PolyhedralSurface) -> DefectReport:
    """Angle defects of every vertex; their total equals 2*pi*(V-E+F)."""
    defects = tuple(angle_defect(surface, v) for v in range(surface.vertex_count))
    return DefectReport(defects, float(sum(defects)), euler_number(surface))


def face_angle_sum(surface: PolyhedralSurface, face_index: int) -> float:
    """Sum of interior angles of one (assumed planar) face."""
    face = surface.faces[face_index]
    return sum(
        _corner_angle(surface.vertices, face[i - 1], face[i], face[(i + 1) % len(face)])
        for i in range(len(face))
    )


def face_normal(surface: PolyhedralSurface, face_index: int) -> np.ndarray:
    """Unit normal by Newell's method (orientation from vertex order)."""
    face = surface.faces[face_index]
    n = np.zeros(3)
    for a, b in _cycle_pairs(face):
        pa, pb = surface.vertices[a], surface.vertices[b]
        n[0] += (pa[1] - pb[1]) * (pa[2] + pb[2])
        n[1] += (pa[2] - pb[2]) * (pa[0] + pb[0])
        n[2] += (pa[0] - pb[0]) * (pa[1] + pb[1])
    norm = np.linalg.norm(n)
    if norm < 1e-15:
        raise MeshError(f"face {face_index} is degenerate")
    return n / norm


def vertex_ring(surface: PolyhedralSurface, vertex: int) -> list[int]:
    """Face indices around a vertex, in consistent cyclic order."""
    edge_face = surface._edge_face
    start = None
    for face_index, face in enumerate(surface.faces):
        if vertex in face:
            start = face_index
            break
    if start is None:
        raise MeshError(f"vertex {vertex} belongs to no face")
    ring = []
    fi = start
    while True:
        ring.append(fi)
        face = surface.faces[fi]
        i = face.index(vertex)
        prev = face[i - 1]
        fi = edge_face[(vertex, prev)]
        if fi == start:
            break
        if len(ring) > len(surface.faces):
            raise MeshError(f"faces around vertex {vertex} do not close into a single cycle")
    return ring


def gauss_image_area(surface: PolyhedralSurface, vertex: int) -> float:
    """Area of the spherical polygon of unit normals of the faces at a vertex.

    Requires the vertex to be strictly convex (with outward-oriented faces);
    raises MeshError otherwise.
    """
    ring = vertex_ring(surface, vertex)
    normals = [face_normal(surface, fi) for fi in ring]
    # convexity: every star vertex weakly below every incident face plane
    star: set[int] = set()
    for fi in ring:
        star.update(surface.faces[fi])
    star.discard(vertex)
    base = surface.vertices[vertex]
    for fi, n in zip(ring, normals):
        for u in star:
            if float(np.dot(n, surface.vertices[u] - base)) > 1e-9:
                raise MeshError(f"vertex {vertex} is not convex (or faces are not outward)")
    m = len(normals)
    if m < 3:
        raise MeshError(f"vertex {vertex} has fewer than 3 faces")
    for i in range(m):
        if np.linalg.norm(normals[i] - normals[(i + 1) % m]) < 1e-8:
            raise MeshError(f"vertex {vertex} is flat across an edge")
    # spherical polygon area = angle sum - (m-2)*pi
    angle_sum = 0.0
    for i in range(m):
        a, b, c = normals[i - 1], normals[i], normals[(i + 1) % m]
        ta = a - np.dot(a, b) * b
        tc = c - np.dot(c, b) * b
        ta /= np.linalg.norm(ta)
        tc /= np.linalg.norm(tc)
        cosang = float(np.dot(ta, tc))
        angle_sum += math.acos(max(-1.0, min(1.0, cosang)))
    return angle_sum - (m - 2) * math.pi


def dual_map(surface: PolyhedralSurface) -> PolyhedralSurface:
    """Dual surface: a vertex at each face centroid, a face per vertex ring."""
    centroids = np.array([surface.vertices[list(f)].mean(axis=0) for f in surface.faces])
    dual_faces = tuple(tuple(vertex_ring(surface, v)) for v in range(surface.vertex_count))
    return PolyhedralSurface(centroids, dual_faces)


# -- construction ----------------------------------------------------------


def surface_from_convex_hull(points: np.ndarray) -> PolyhedralSurface:
    """Convex hull as a surface, merging coplanar hull triangles into polygons."""
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    reps: list[np.ndarray] = []
    members: list[list[int]] = []
    for si, eq in enumerate(hull.equations):
        for gi, rep in enumerate(reps):
            if np.abs(eq - rep).max() < 1e-6:
                members[gi].append(si)
                break
        else:
            reps.append(eq)
            members.append([si])
    groups = sorted(
        ((tuple(np.round(rep, 6)), ids) for rep, ids in zip(reps, members)),
        key=lambda pair: pair[0],
    )
    faces: list[tuple[int, ...]] = []
    for eq, simplex_ids in groups:
        outward = np.array(eq[:3])
        tris = [hull.simplices[si] for si in simplex_ids]
        edge_use: dict[tuple[int, int], int] = {}
        for tri in tris:
            for a, b in _cycle_pairs(list(tri)):
                k = (min(a, b), max(a, b))
                edge_use[k] = edge_use.get(k, 0) + 1
        boundary = [e for e, cnt in edge_use.items() if cnt == 1]
        neighbors: dict[int, list[int]] = {}
        for a, b in boundary:
            neighbors.setdefault(a, []).append(b)
            neighbors.setdefault(b, []).append(a)
        start = min(neighbors)
        cycle = [start, min(neighbors[start])]
        while cycle[-1] != start:
            nxt = [v for v in neighbors[cycle[-1]] if v != cycle[-2]]
            cycle.append(nxt[0])
        cycle.pop()
        # orient against the hull's outward normal, then rotate deterministically
        ring = np.array([pts[v] for v in cycle])
        newell = np.zeros(3)
        for i in range(len(ring)):
            pa, pb = ring[i], ring[(i + 1) % len(ring)]
            newell += np.cross(pa, pb)
        if float(np.dot(newell, outward)) < 0:
            cycle.reverse()
        lowest = cycle.index(min(cycle))
        faces.append(tuple(cycle[lowest:] + cycle[:lowest]))
    used = sorted({v for f in faces for v in f})
    remap = {v: i for i, v in enumerate(used)}
    return PolyhedralSurface(pts[used], tuple(tuple(remap[v] for v in f) for f in faces))


_PHI = (1.0 + math.sqrt(5.0)) / 2.0


def _signs(values: Sequence[float]) -> list[tuple[float, ...]]:
    out = [()]
    for v in values:
        if v == 0.0:
            out = [row + (0.0,) for row in out]
        else:
            out = [row + (s * v,) for row in out for s in (1.0, -1.0)]
    return out


def _cyclic(coords: Iterable[tuple[float, float, float]]) -> list[tuple[float, float, float]]:
    out = []
    for x, y, z in coords:
        out.extend([(x, y, z), (y, z, x), (z, x, y)])
    return out


_BUILTIN_POINTS = {
    "tetrahedron": [
        tuple(c / (2.0 * math.sqrt(2.0)) for c in p)
        for p in [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    ],
    "cube": _signs([0.5, 0.5, 0.5]),
    "octahedron": _cyclic(_signs([1.0 / math.sqrt(2.0), 0.0, 0.0])),
    "dodecahedron": [
        tuple(c * _PHI / 2.0 for c in p)
        for p in _signs([1.0, 1.0, 1.0]) + _cyclic(_signs([0.0, 1.0 / _PHI, _PHI]))
    ],
    "icosahedron": [tuple(c / 2.0 for c in p) for p in _cyclic(_signs([0.0, 1.0, _PHI]))],
}

BUILTIN_NAMES = tuple(sorted(_BUILTIN_POINTS))


def builtin(name: str) -> PolyhedralSurface:
    """One of the five regular solids with unit edge length."""
    try:
        points = _BUILTIN_POINTS[name]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    return surface_from_convex_hull(np.array(sorted(set(points)), dtype=float))


def torus_grid(nu: int = 4, nv: int = 4, R: float = 2.0, r: float = 1.0) -> PolyhedralSurface:
    """A quadrilateral torus mesh: nu around the hole, nv around the tube."""
    if nu < 3 or nv < 3:
        raise ValueError("torus grid needs nu >= 3 and nv >= 3")
    if not (0.0 < r < R):
        raise ValueError("torus radii must satisfy 0 < r < R")
    verts = []
    for i in range(nu):
        a = 2.0 * math.pi * i / nu
        for j in range(nv):
            b = 2.0 * math.pi * j / nv
            w = R + r * math.cos(b)
            verts.append((w * math.cos(a), w * math.sin(a), r * math.sin(b)))
    def vid(i: int, j: int) -> int:
        return (i % nu) * nv + (j % nv)
    faces = []
    for i in range(nu):
        for j in range(nv):
            faces.append((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)))
    return PolyhedralSurface(np.array(verts), tuple(faces))


# -- OFF files ---------------------------------------------------------------


def load_off(data: bytes | str) -> PolyhedralSurface:
    """Parse OFF text: header, 'V F E' counts, vertex lines, face lines."""
    text = data.decode() if isinstance(data, bytes) else data
    tokens: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            tokens.extend(body.split())
    if not tokens or tokens[0].upper() != "OFF":
        raise MeshError("not an OFF file (missing OFF header)")
    pos = 1
    try:
        nv, nf = int(tokens[pos]), int(tokens[pos + 1])
        pos += 3  # the edge count is ignored
        verts = np.array(
            [[float(tokens[pos + 3 * i + k]) for k in range(3)] for i in range(nv)]
        )
        pos += 3 * nv
        faces = []
        for _ in range(nf):
            cnt = int(tokens[pos])
            faces.append(tuple(int(t) for t in tokens[pos + 1 : pos + 1 + cnt]))
            pos += 1 + cnt
    except (IndexError, ValueError) as exc:
        raise MeshError(f"malformed OFF data: {exc}") from None
    if pos != len(tokens):
        raise MeshError("trailing tokens after the last face")
    return PolyhedralSurface(verts, tuple(faces))


def dump_off(surface: PolyhedralSurface) -> str:
    lines = ["OFF", f"{surface.vertex_count} {surface.face_count} {surface.edge_count}"]
    for v in surface.vertices:
        lines.append(f"{float(v[0])!r} {float(v[1])!r} {float(v[2])!r}")
    for f in surface.faces:
        lines.append(" ".join([str(len(f))] + [str(i) for i in f]))
    return "\n".join(lines) + "\n"
