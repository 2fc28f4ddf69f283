"""Stereographic projection from the unit sphere and images of plane cuts.

Projection is from the north pole N = (0, 0, 1) to the z = 0 plane:
(x, y, z) -> (x, y) / (1 - z), with N itself mapping to the point at
infinity.  Circles on the sphere map to circles or lines in the plane, and
the map preserves angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SpherePoint",
    "PlanePoint",
    "PointAtInfinity",
    "INFINITY",
    "PlaneCut",
    "ProjectedCircle",
    "ProjectedLine",
    "project",
    "unproject",
    "project_tangent",
    "image_of_cut",
    "spherical_triangle_area",
    "cut_points",
]


@dataclass(frozen=True)
class SpherePoint:
    """A point on the unit sphere (radius checked to 1e-9)."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        r2 = self.x * self.x + self.y * self.y + self.z * self.z
        if abs(r2 - 1.0) > 2e-9:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not on the unit sphere")

    @classmethod
    def normalize(cls, x: float, y: float, z: float) -> "SpherePoint":
        n = math.sqrt(x * x + y * y + z * z)
        if n < 1e-15:
            raise ValueError("cannot normalize the zero vector")
        return cls(x / n, y / n, z / n)

    @property
    def array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class PlanePoint:
    """A finite point of the image plane."""

    x: float
    y: float

    def __post_init__(self):
        # normalize signed zeros so printed and serialized forms are stable
        object.__setattr__(self, "x", self.x + 0.0)
        object.__setattr__(self, "y", self.y + 0.0)


class PointAtInfinity:
    """The single extra point that the north pole projects to."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = PointAtInfinity()

ExtendedPlanePoint = PlanePoint | PointAtInfinity

_POLE_EPS = 1e-12


@dataclass(frozen=True)
class PlaneCut:
    """A plane a*x + b*y + c*z + d = 0 that cuts the sphere in a circle.

    Tangent planes and planes missing the sphere are rejected.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        n = math.sqrt(self.a**2 + self.b**2 + self.c**2)
        if n < 1e-15:
            raise ValueError("plane normal must be nonzero")
        dist = abs(self.d) / n
        if dist >= 1.0 - 1e-12:
            raise ValueError(
                f"plane misses or is tangent to the sphere (center distance {dist:.6g})"
            )

    @property
    def normal(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])


@dataclass(frozen=True)
class ProjectedCircle:
    """Image of a cut that avoids the north pole: a circle."""

    center: PlanePoint
    radius: float


@dataclass(frozen=True)
class ProjectedLine:
    """Image of a cut through the north pole: a line a*x + b*y + c = 0.

    Normalized so a^2 + b^2 = 1 and the first nonzero of (a, b) is positive.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", self.a + 0.0)
        object.__setattr__(self, "b", self.b + 0.0)
        object.__setattr__(self, "c", self.c + 0.0)


def project(p: SpherePoint) -> ExtendedPlanePoint:
    """Stereographic image of a sphere point; the north pole goes to INFINITY."""
    if abs(1.0 - p.z) < _POLE_EPS:
        return INFINITY
    s = 1.0 / (1.0 - p.z)
    return PlanePoint(p.x * s, p.y * s)


def unproject(q: ExtendedPlanePoint) -> SpherePoint:
    """Inverse stereographic image; INFINITY goes to the north pole."""
    if isinstance(q, PointAtInfinity):
        return SpherePoint(0.0, 0.0, 1.0)
    big = q.x * q.x + q.y * q.y
    t = 2.0 / (big + 1.0)
    return SpherePoint(t * q.x, t * q.y, (big - 1.0) / (big + 1.0))


def project_tangent(p: SpherePoint, u: np.ndarray) -> np.ndarray:
    """Differential of project at p applied to a tangent vector u."""
    if abs(1.0 - p.z) < 1e-3:
        raise ValueError("differential is not defined this close to the north pole")
    u = np.asarray(u, dtype=float)
    s = 1.0 - p.z
    return np.array([u[0] * s + p.x * u[2], u[1] * s + p.y * u[2]]) / (s * s)


def image_of_cut(cut: PlaneCut) -> ProjectedCircle | ProjectedLine:
    """Image of the cut circle: substituting the inverse projection into the
    plane equation gives (c+d)(x^2+y^2) + 2ax + 2by + (d-c) = 0."""
    scale = math.sqrt(cut.a**2 + cut.b**2 + cut.c**2)
    a, b, c, d = (v / scale for v in (cut.a, cut.b, cut.c, cut.d))
    w = c + d
    if abs(w) < 1e-12:
        # the cut passes through the north pole: a line 2ax + 2by + (d-c) = 0
        la, lb, lc = a, b, (d - c) / 2.0
        n = math.hypot(la, lb)
        la, lb, lc = la / n, lb / n, lc / n
        lead = la if abs(la) > 1e-12 else lb
        if lead < 0:
            la, lb, lc = -la, -lb, -lc
        return ProjectedLine(la, lb, lc)
    center = PlanePoint(-a / w, -b / w)
    r2 = (a * a + b * b + c * c - d * d) / (w * w)
    return ProjectedCircle(center, math.sqrt(r2))


def cut_points(cut: PlaneCut, count: int) -> list[SpherePoint]:
    """Evenly spaced sample points on the cut circle (at least 3)."""
    if not isinstance(count, int) or count < 3:
        raise ValueError(f"need at least 3 samples to witness a circle, got {count!r}")
    n = cut.normal / np.linalg.norm(cut.normal)
    center = -float(cut.d / np.linalg.norm(cut.normal)) * n
    rho = math.sqrt(max(0.0, 1.0 - float(center @ center)))
    helper = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(n, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(n, e1)
    out = []
    for k in range(count):
        ang = 2.0 * math.pi * k / count
        p = center + rho * (math.cos(ang) * e1 + math.sin(ang) * e2)
        out.append(SpherePoint.normalize(*p))
    return out


def spherical_triangle_area(a: SpherePoint, b: SpherePoint, c: SpherePoint) -> float:
    """Area (angle sum minus pi) of the spherical triangle with the given corners."""
    pts = [p.array for p in (a, b, c)]
    for i in range(3):
        for j in range(i + 1, 3):
            d = float(np.dot(pts[i], pts[j]))
            if d > 1.0 - 1e-12:
                raise ValueError("triangle corners must be distinct")
            if d < -1.0 + 1e-12:
                raise ValueError("triangle corners must not be antipodal")
    total = 0.0
    for i in range(3):
        at, other1, other2 = pts[i], pts[(i + 1) % 3], pts[(i + 2) % 3]
        t1 = other1 - float(np.dot(other1, at)) * at
        t2 = other2 - float(np.dot(other2, at)) * at
        t1 /= np.linalg.norm(t1)
        t2 /= np.linalg.norm(t2)
        total += math.acos(max(-1.0, min(1.0, float(np.dot(t1, t2)))))
    return total - math.pi
