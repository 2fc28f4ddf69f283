"""Hyperbolic geometry in the upper half-plane and unit-disk models.

Upper-half-plane h-lines are vertical rays or semicircles centered on the
real axis; disk h-lines are diameters or arcs of circles orthogonal to the
unit circle.  Distance along a vertical line is |ln(y1/y2)|; in general a
Moebius map sends the joining h-line to a vertical one first.  The two
models are exchanged by w = (z - i)/(1 - i z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "UhpPoint",
    "DiskPoint",
    "HLine",
    "VerticalLine",
    "Semicircle",
    "Diameter",
    "DiskArc",
    "geodesic_through",
    "disk_geodesic_through",
    "distance",
    "disk_distance",
    "uhp_to_disk",
    "disk_to_uhp",
    "uhp_line_to_disk",
    "disk_line_to_uhp",
    "reflect",
    "intersection",
    "line_contains",
    "disjoint_parallels",
    "DiskTriangle",
    "triangle_tiling",
    "triangle_angles",
    "triangle_side_lengths",
    "render_tiling_svg",
]


@dataclass(frozen=True)
class UhpPoint:
    """A point x + i y of the upper half-plane (y > 0)."""

    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0 and math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"({self.x}, {self.y}) is not in the open upper half-plane")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk."""

    x: float
    y: float

    def __post_init__(self):
        if not (self.x * self.x + self.y * self.y < 1.0):
            raise ValueError(f"({self.x}, {self.y}) is not inside the unit disk")

    @property
    def w(self) -> complex:
        return complex(self.x, self.y)


class HLine:
    """Base for hyperbolic lines; ``model`` is 'uhp' or 'disk'."""

    model = ""


@dataclass(frozen=True)
class VerticalLine(HLine):
    """Upper-half-plane h-line {x = x0}."""

    x0: float
    model = "uhp"


@dataclass(frozen=True)
class Semicircle(HLine):
    """Upper-half-plane h-line: semicircle centered on the real axis."""

    center: float
    radius: float
    model = "uhp"

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("semicircle radius must be positive")

    @property
    def feet(self) -> tuple[float, float]:
        return (self.center - self.radius, self.center + self.radius)


@dataclass(frozen=True)
class Diameter(HLine):
    """Disk h-line through the origin with unit direction (dx, dy)."""

    dx: float
    dy: float
    model = "disk"

    def __post_init__(self):
        n = math.hypot(self.dx, self.dy)
        if abs(n - 1.0) > 1e-9:
            raise ValueError("diameter direction must be a unit vector")


@dataclass(frozen=True)
class DiskArc(HLine):
    """Disk h-line: arc of a circle orthogonal to the unit circle.

    Orthogonality means |center|^2 = 1 + radius^2.
    """

    cx: float
    cy: float
    radius: float
    model = "disk"

    def __post_init__(self):
        orth = self.cx * self.cx + self.cy * self.cy - 1.0 - self.radius * self.radius
        if abs(orth) > 1e-7:
            raise ValueError("arc circle is not orthogonal to the unit circle")


# -- construction -----------------------------------------------------------


def geodesic_through(a: UhpPoint, b: UhpPoint) -> HLine:
    """The unique upper-half-plane h-line through two distinct points."""
    if abs(a.x - b.x) < 1e-12 and abs(a.y - b.y) < 1e-12:
        raise ValueError("need two distinct points")
    if abs(a.x - b.x) < 1e-12:
        return VerticalLine(0.5 * (a.x + b.x))
    c = (b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y) / (2.0 * (b.x - a.x))
    return Semicircle(c, math.hypot(a.x - c, a.y))


def _unit_with_sign(x: float, y: float) -> tuple[float, float]:
    n = math.hypot(x, y)
    x, y = x / n, y / n
    if x < -1e-12 or (abs(x) <= 1e-12 and y < 0):
        x, y = -x, -y
    return x, y


def disk_geodesic_through(p: DiskPoint, q: DiskPoint) -> HLine:
    """The unique disk h-line through two distinct points."""
    if abs(p.x - q.x) < 1e-12 and abs(p.y - q.y) < 1e-12:
        raise ValueError("need two distinct points")
    cross = p.x * q.y - p.y * q.x
    if abs(cross) < 1e-12:
        return Diameter(*_unit_with_sign(q.x - p.x, q.y - p.y))
    # center satisfies 2 c.p = |p|^2 + 1 and 2 c.q = |q|^2 + 1
    rp = p.x * p.x + p.y * p.y + 1.0
    rq = q.x * q.x + q.y * q.y + 1.0
    cx = (q.y * rp - p.y * rq) / (2.0 * cross)
    cy = (p.x * rq - q.x * rp) / (2.0 * cross)
    r2 = cx * cx + cy * cy - 1.0
    assert r2 > 0, "orthogonal-circle center must lie outside the unit circle"
    return DiskArc(cx, cy, math.sqrt(r2))


# -- distance ---------------------------------------------------------------


def distance(a: UhpPoint, b: UhpPoint) -> float:
    """Hyperbolic distance in the upper half-plane.

    Vertical case: |ln(y_a / y_b)|.  Otherwise a Moebius map z ->
    (z - p)/(q - z) with p, q the feet of the joining h-line sends it to
    the positive imaginary axis, where the ratio of moduli gives the
    distance.
    """
    if abs(a.x - b.x) < 1e-12 and abs(a.y - b.y) < 1e-12:
        return 0.0
    line = geodesic_through(a, b)
    if isinstance(line, VerticalLine):
        return abs(math.log(a.y / b.y))
    p, q = line.feet
    ma = abs(a.z - p) / abs(q - a.z)
    mb = abs(b.z - p) / abs(q - b.z)
    return abs(math.log(ma / mb))


def disk_distance(p: DiskPoint, q: DiskPoint) -> float:
    """Hyperbolic distance in the disk model (via the half-plane)."""
    return distance(disk_to_uhp(p), disk_to_uhp(q))


# -- model transfer ----------------------------------------------------------


def uhp_to_disk(a: UhpPoint) -> DiskPoint:
    """w = (z - i)/(1 - i z)."""
    w = (a.z - 1j) / (1.0 - 1j * a.z)
    mag = abs(w)
    if mag >= 1.0:  # numerical spill just outside the disk
        w *= (1.0 - 1e-15) / mag
    return DiskPoint(w.real, w.imag)


def disk_to_uhp(p: DiskPoint) -> UhpPoint:
    """z = (w + i)/(1 + i w)."""
    z = (p.w + 1j) / (1.0 + 1j * p.w)
    return UhpPoint(z.real, max(z.imag, 1e-300))


def _boundary_to_disk(x: float | None) -> complex:
    """Image on the unit circle of a real boundary point (None means infinity)."""
    if x is None:
        return 1j
    w = (complex(x, 0.0) - 1j) / (1.0 - 1j * complex(x, 0.0))
    return w / abs(w)


def _disk_line_through_boundary(u: complex, v: complex) -> HLine:
    dot = u.real * v.real + u.imag * v.imag
    if abs(u + v) < 1e-9:
        return Diameter(*_unit_with_sign(u.real, u.imag))
    cx = (u.real + v.real) / (1.0 + dot)
    cy = (u.imag + v.imag) / (1.0 + dot)
    r2 = cx * cx + cy * cy - 1.0
    assert r2 > 0
    return DiskArc(cx, cy, math.sqrt(r2))


def uhp_line_to_disk(line: HLine) -> HLine:
    """Transfer an upper-half-plane h-line to the disk model."""
    if line.model != "uhp":
        raise ValueError("expected an upper-half-plane h-line")
    if isinstance(line, VerticalLine):
        return _disk_line_through_boundary(_boundary_to_disk(line.x0), _boundary_to_disk(None))
    p, q = line.feet
    return _disk_line_through_boundary(_boundary_to_disk(p), _boundary_to_disk(q))


def disk_line_to_uhp(line: HLine) -> HLine:
    """Transfer a disk h-line to the upper half-plane."""
    if line.model != "disk":
        raise ValueError("expected a disk h-line")
    if isinstance(line, Diameter):
        feet_w = (complex(line.dx, line.dy), complex(-line.dx, -line.dy))
    else:
        c = complex(line.cx, line.cy)
        mid = c / (abs(c) ** 2)
        perp = complex(-c.imag, c.real) / abs(c)
        span = line.radius / abs(c)
        feet_w = (mid + span * perp, mid - span * perp)
    feet_x: list[float | None] = []
    for w in feet_w:
        denom = 1.0 + 1j * w
        if abs(denom) < 1e-9:
            feet_x.append(None)
        else:
            z = (w + 1j) / denom
            feet_x.append(z.real)
    if feet_x[0] is None or feet_x[1] is None:
        other = feet_x[0] if feet_x[1] is None else feet_x[1]
        assert other is not None
        return VerticalLine(other)
    p, q = sorted(feet_x)
    return Semicircle(0.5 * (p + q), 0.5 * (q - p))


# -- incidence, reflection, intersection -------------------------------------


def line_contains(line: HLine, point: UhpPoint | DiskPoint, tol: float = 1e-9) -> bool:
    """Whether the point lies on the h-line (matching models required)."""
    if isinstance(point, UhpPoint):
        if line.model != "uhp":
            raise ValueError("point and line live in different models")
        if isinstance(line, VerticalLine):
            return abs(point.x - line.x0) <= tol
        assert isinstance(line, Semicircle)
        return abs(math.hypot(point.x - line.center, point.y) - line.radius) <= tol
    if line.model != "disk":
        raise ValueError("point and line live in different models")
    if isinstance(line, Diameter):
        return abs(point.x * line.dy - point.y * line.dx) <= tol
    assert isinstance(line, DiskArc)
    return abs(math.hypot(point.x - line.cx, point.y - line.cy) - line.radius) <= tol


def reflect(p: UhpPoint | DiskPoint, across: HLine) -> UhpPoint | DiskPoint:
    """Hyperbolic reflection of a point across an h-line of the same model."""
    if isinstance(p, UhpPoint):
        if across.model != "uhp":
            raise ValueError("point and mirror live in different models")
        if isinstance(across, VerticalLine):
            return UhpPoint(2.0 * across.x0 - p.x, p.y)
        assert isinstance(across, Semicircle)
        w = p.z - across.center
        z = across.center + across.radius**2 / w.conjugate()
        return UhpPoint(z.real, z.imag)
    if across.model != "disk":
        raise ValueError("point and mirror live in different models")
    if isinstance(across, Diameter):
        d = p.x * across.dx + p.y * across.dy
        return DiskPoint(2.0 * d * across.dx - p.x, 2.0 * d * across.dy - p.y)
    assert isinstance(across, DiskArc)
    c = complex(across.cx, across.cy)
    w = p.w - c
    img = c + across.radius**2 / w.conjugate()
    mag = abs(img)
    if mag >= 1.0:
        img *= (1.0 - 1e-15) / mag
    return DiskPoint(img.real, img.imag)


def intersection(l1: HLine, l2: HLine) -> UhpPoint | None:
    """The common point of two upper-half-plane h-lines, or None.

    None covers disjoint lines, boundary-asymptotic lines, and identical
    lines alike.
    """
    if l1.model != "uhp" or l2.model != "uhp":
        raise ValueError("intersection expects upper-half-plane h-lines")
    if isinstance(l1, VerticalLine) and isinstance(l2, VerticalLine):
        return None
    if isinstance(l1, VerticalLine) or isinstance(l2, VerticalLine):
        v, s = (l1, l2) if isinstance(l1, VerticalLine) else (l2, l1)
        assert isinstance(s, Semicircle)
        y2 = s.radius**2 - (v.x0 - s.center) ** 2
        if y2 <= 1e-15:
            return None
        return UhpPoint(v.x0, math.sqrt(y2))
    assert isinstance(l1, Semicircle) and isinstance(l2, Semicircle)
    if abs(l1.center - l2.center) < 1e-15:
        return None
    x = (l1.radius**2 - l2.radius**2 + l2.center**2 - l1.center**2) / (
        2.0 * (l2.center - l1.center)
    )
    y2 = l1.radius**2 - (x - l1.center) ** 2
    if y2 <= 1e-15:
        return None
    return UhpPoint(x, math.sqrt(y2))


# -- parallels ---------------------------------------------------------------


def _line_through_direction(p: UhpPoint, theta: float) -> HLine:
    """The h-line through p whose tangent there has direction angle theta."""
    if abs(math.cos(theta)) < 1e-12:
        return VerticalLine(p.x)
    c = p.x + p.y * math.tan(theta)
    return Semicircle(c, math.hypot(p.x - c, p.y))


def _line_key(line: HLine) -> tuple:
    if isinstance(line, VerticalLine):
        return ("v", round(line.x0, 9))
    assert isinstance(line, Semicircle)
    return ("s", round(line.center, 9), round(line.radius, 9))


def disjoint_parallels(L: HLine, p: UhpPoint, count: int) -> list[HLine]:
    """``count`` distinct h-lines through p, each disjoint from L in the
    open upper half-plane."""
    if L.model != "uhp":
        raise ValueError("disjoint_parallels expects an upper-half-plane h-line")
    if not isinstance(count, int) or count < 1:
        raise ValueError("count must be a positive integer")
    if line_contains(L, p):
        raise ValueError("the point must not lie on the line")
    found: list[HLine] = []
    keys: set[tuple] = set()

    def consider(cand: HLine) -> None:
        if len(found) >= count:
            return
        k = _line_key(cand)
        if k in keys:
            return
        if isinstance(L, VerticalLine) and isinstance(cand, VerticalLine):
            disjoint = abs(L.x0 - cand.x0) > 1e-12
        else:
            disjoint = intersection(L, cand) is None
        if disjoint:
            keys.add(k)
            found.append(cand)

    consider(_line_through_direction(p, math.pi / 2.0))
    n = 8
    while len(found) < count and n <= (1 << 22):
        for j in range(1, n):
            consider(_line_through_direction(p, -math.pi / 2.0 + math.pi * j / n))
            if len(found) >= count:
                break
        n *= 2
    if len(found) < count:
        raise RuntimeError("direction sweep failed to find enough parallels")
    return found


# -- triangle tilings ---------------------------------------------------------


@dataclass(frozen=True)
class DiskTriangle:
    """A hyperbolic triangle in the disk model."""

    vertices: tuple[DiskPoint, DiskPoint, DiskPoint]


def _side_tangent(v: DiskPoint, w: DiskPoint) -> tuple[float, float]:
    """Unit tangent at v of the h-line toward w."""
    line = disk_geodesic_through(v, w)
    if isinstance(line, Diameter):
        tx, ty = line.dx, line.dy
    else:
        assert isinstance(line, DiskArc)
        tx, ty = -(v.y - line.cy), v.x - line.cx
        n = math.hypot(tx, ty)
        tx, ty = tx / n, ty / n
    if tx * (w.x - v.x) + ty * (w.y - v.y) < 0:
        tx, ty = -tx, -ty
    return tx, ty


def triangle_angles(tri: DiskTriangle) -> tuple[float, float, float]:
    """Interior angles at the three vertices."""
    out = []
    for i in range(3):
        v = tri.vertices[i]
        w1 = tri.vertices[(i + 1) % 3]
        w2 = tri.vertices[(i + 2) % 3]
        t1 = _side_tangent(v, w1)
        t2 = _side_tangent(v, w2)
        dot = max(-1.0, min(1.0, t1[0] * t2[0] + t1[1] * t2[1]))
        out.append(math.acos(dot))
    return tuple(out)  # type: ignore[return-value]


def triangle_side_lengths(tri: DiskTriangle) -> tuple[float, float, float]:
    """Hyperbolic side lengths opposite each vertex."""
    v = tri.vertices
    return (
        disk_distance(v[1], v[2]),
        disk_distance(v[2], v[0]),
        disk_distance(v[0], v[1]),
    )


def _triangle_key(tri: DiskTriangle) -> tuple:
    return tuple(sorted((round(v.x, 7), round(v.y, 7)) for v in tri.vertices))


def triangle_tiling(p: int, q: int, r: int, depth: int) -> list[DiskTriangle]:
    """Tiles obtained from the (p, q, r) triangle by up to ``depth`` rounds
    of reflections across sides.

    The seed triangle has angles pi/p, pi/q, pi/r with the first vertex at
    the disk center; each round reflects every frontier tile across its
    three sides.
    """
    for n in (p, q, r):
        if not isinstance(n, int) or n < 2:
            raise ValueError("p, q, r must be integers >= 2")
    if not isinstance(depth, int) or depth < 0:
        raise ValueError("depth must be a non-negative integer")
    if 1.0 / p + 1.0 / q + 1.0 / r >= 1.0 - 1e-12:
        raise ValueError("need 1/p + 1/q + 1/r < 1 for a hyperbolic triangle")
    A, B, C = math.pi / p, math.pi / q, math.pi / r
    cosh_ab = (math.cos(C) + math.cos(A) * math.cos(B)) / (math.sin(A) * math.sin(B))
    cosh_ac = (math.cos(B) + math.cos(A) * math.cos(C)) / (math.sin(A) * math.sin(C))
    len_ab = math.acosh(cosh_ab)
    len_ac = math.acosh(cosh_ac)
    vA = DiskPoint(0.0, 0.0)
    vB = DiskPoint(math.tanh(len_ab / 2.0), 0.0)
    rad = math.tanh(len_ac / 2.0)
    vC = DiskPoint(rad * math.cos(A), rad * math.sin(A))
    seed = DiskTriangle((vA, vB, vC))
    tiles = [seed]
    seen = {_triangle_key(seed)}
    frontier = [seed]
    for _ in range(depth):
        new_frontier: list[DiskTriangle] = []
        for tri in frontier:
            for i, j in ((0, 1), (1, 2), (2, 0)):
                side = disk_geodesic_through(tri.vertices[i], tri.vertices[j])
                image = DiskTriangle(tuple(reflect(v, side) for v in tri.vertices))  # type: ignore[arg-type]
                key = _triangle_key(image)
                if key not in seen:
                    seen.add(key)
                    tiles.append(image)
                    new_frontier.append(image)
        frontier = new_frontier
    return tiles


# -- rendering ----------------------------------------------------------------


def _side_samples(v: DiskPoint, w: DiskPoint, samples: int) -> list[tuple[float, float]]:
    line = disk_geodesic_through(v, w)
    pts = []
    if isinstance(line, Diameter):
        for k in range(samples + 1):
            t = k / samples
            pts.append((v.x + t * (w.x - v.x), v.y + t * (w.y - v.y)))
        return pts
    assert isinstance(line, DiskArc)
    a1 = math.atan2(v.y - line.cy, v.x - line.cx)
    a2 = math.atan2(w.y - line.cy, w.x - line.cx)
    d = a2 - a1
    while d > math.pi:
        d -= 2.0 * math.pi
    while d < -math.pi:
        d += 2.0 * math.pi
    for k in range(samples + 1):
        ang = a1 + d * k / samples
        pts.append((line.cx + line.radius * math.cos(ang), line.cy + line.radius * math.sin(ang)))
    return pts


def render_tiling_svg(tiles: Sequence[DiskTriangle], size: int = 600, samples: int = 24) -> str:
    """SVG drawing of disk triangles: the unit circle plus every tile edge."""
    half = size / 2.0
    scale = half * 0.96

    def sxy(x: float, y: float) -> tuple[float, float]:
        return (half + scale * x, half - scale * y)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<circle cx="{half}" cy="{half}" r="{scale}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for tri in tiles:
        points: list[tuple[float, float]] = []
        for i, j in ((0, 1), (1, 2), (2, 0)):
            side = _side_samples(tri.vertices[i], tri.vertices[j], samples)
            points.extend(side[:-1])
        d = "M " + " L ".join(f"{sxy(x, y)[0]:.2f} {sxy(x, y)[1]:.2f}" for x, y in points) + " Z"
        parts.append(f'<path d="{d}" fill="none" stroke="#225577" stroke-width="0.8"/>')
    parts.append("</svg>")
    return "\n".join(parts)
