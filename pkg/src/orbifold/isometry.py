"""Planar isometry groups for the 17 plane signatures, orbits, replication.

Generator tables are hard-coded in cell units on a unit square cell, or on
a hexagonal cell spanned by (1,0) and (1/2, sqrt(3)/2) for signatures
containing rotation order 3 or 6.  Exact entries only: 0, +-1, +-1/2,
sqrt(3)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .euler import classify, conway_name
from .notation import OrbifoldSignature, parse, to_string

__all__ = [
    "Isometry2",
    "WallpaperGroup",
    "Viewport",
    "group_for",
    "orbit_isometries",
    "replicate",
    "EUCLIDEAN_SIGNATURES",
]

_S3 = math.sqrt(3.0) / 2.0

Vec = tuple[float, float]
Mat = tuple[tuple[float, float], tuple[float, float]]


@dataclass(frozen=True)
class Isometry2:
    """A plane isometry x -> linear @ x + translation."""

    linear: Mat
    translation: Vec

    def __post_init__(self):
        m = self.matrix
        err = np.abs(m.T @ m - np.eye(2)).max()
        if err > 1e-12:
            raise ValueError(f"linear part is not orthogonal (error {err:.2e})")

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.linear, dtype=float)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.translation, dtype=float)

    @property
    def orientation(self) -> int:
        """+1 for orientation-preserving, -1 for reversing."""
        return 1 if np.linalg.det(self.matrix) > 0 else -1

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Apply to an (n, 2) array (or a single 2-vector)."""
        pts = np.asarray(points, dtype=float)
        return pts @ self.matrix.T + self.vector

    def compose(self, other: "Isometry2") -> "Isometry2":
        """self after other."""
        m = self.matrix @ other.matrix
        t = self.matrix @ other.vector + self.vector
        return Isometry2(_as_mat(m), (float(t[0]), float(t[1])))

    def inverse(self) -> "Isometry2":
        m = self.matrix.T  # orthogonal
        t = -m @ self.vector
        return Isometry2(_as_mat(m), (float(t[0]), float(t[1])))

    def to_json(self) -> dict:
        return {"m": [list(row) for row in self.linear], "t": list(self.translation)}


def _as_mat(m: np.ndarray) -> Mat:
    return ((float(m[0, 0]), float(m[0, 1])), (float(m[1, 0]), float(m[1, 1])))


def _key(m: np.ndarray, t: np.ndarray) -> tuple:
    return tuple(np.round(m, 9).ravel()) + tuple(np.round(t, 9))


@dataclass(frozen=True)
class Viewport:
    """Axis-aligned rectangle in pattern units."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise ValueError("viewport max corner must exceed min corner componentwise")

    @property
    def lo(self) -> np.ndarray:
        return np.array([self.xmin, self.ymin])

    @property
    def hi(self) -> np.ndarray:
        return np.array([self.xmax, self.ymax])


@dataclass(frozen=True)
class WallpaperGroup:
    signature: OrbifoldSignature
    lattice: tuple[Vec, Vec]
    generators: tuple[Isometry2, ...]
    point_group_order: int

    @property
    def name(self) -> str:
        nm = conway_name(self.signature)
        return nm.full if nm else ""

    @property
    def lattice_matrix(self) -> np.ndarray:
        """Columns are the lattice vectors."""
        return np.array(self.lattice, dtype=float).T


# -- generator tables -----------------------------------------------------

_I: Mat = ((1.0, 0.0), (0.0, 1.0))
_R2: Mat = ((-1.0, 0.0), (0.0, -1.0))
_R4: Mat = ((0.0, -1.0), (1.0, 0.0))
_R3: Mat = ((-0.5, -_S3), (_S3, -0.5))
_R6: Mat = ((0.5, -_S3), (_S3, 0.5))
_MX: Mat = ((1.0, 0.0), (0.0, -1.0))  # mirror across the x-axis
_MY: Mat = ((-1.0, 0.0), (0.0, 1.0))  # mirror across the y-axis
_MD: Mat = ((0.0, 1.0), (1.0, 0.0))  # mirror across y = x
_MA: Mat = ((0.0, -1.0), (-1.0, 0.0))  # mirror across y = -x

_SQUARE: tuple[Vec, Vec] = ((1.0, 0.0), (0.0, 1.0))
_HEX: tuple[Vec, Vec] = ((1.0, 0.0), (0.5, _S3))

_O = (0.0, 0.0)

# signature -> (lattice, [(linear, translation in cell units)]); translations
# by both lattice vectors are implicit generators of every group
_TABLES: dict[str, tuple[tuple[Vec, Vec], list[tuple[Mat, Vec]]]] = {
    "o": (_SQUARE, []),
    "2222": (_SQUARE, [(_R2, _O)]),
    "442": (_SQUARE, [(_R4, _O)]),
    "333": (_HEX, [(_R3, _O)]),
    "632": (_HEX, [(_R6, _O)]),
    "*2222": (_SQUARE, [(_MX, _O), (_MY, _O)]),
    "*442": (_SQUARE, [(_R4, _O), (_MX, _O)]),
    "*333": (_HEX, [(_R3, _O), (_MY, _O)]),
    "3*3": (_HEX, [(_R3, _O), (_MX, _O)]),
    "*632": (_HEX, [(_R6, _O), (_MX, _O)]),
    # mirror across x + y = 1/2, rotations kept off the mirrors
    "4*2": (_SQUARE, [(_R4, _O), (_MA, (0.5, 0.5))]),
    # mirror x = 1/4 with half-turns off it
    "22*": (_SQUARE, [(_R2, _O), (_MY, (0.5, 0.0))]),
    # both diagonal mirrors; half-turn at (1/2, 0) arises off the mirrors
    "2*22": (_SQUARE, [(_MD, _O), (_MA, _O)]),
    "**": (_SQUARE, [(_MX, _O)]),
    "*x": (_SQUARE, [(_MD, _O)]),
    # half-turn plus an axis-parallel glide
    "22x": (_SQUARE, [(_R2, _O), (_MX, (0.5, 0.5))]),
    "xx": (_SQUARE, [(_MX, (0.5, 0.0))]),
}

EUCLIDEAN_SIGNATURES: tuple[str, ...] = tuple(sorted(_TABLES))


def group_for(sig: OrbifoldSignature | str, cell_scale: float = 1.0) -> WallpaperGroup:
    """The hard-coded isometry group for one of the 17 plane signatures."""
    if isinstance(sig, str):
        sig = parse(sig)
    key = to_string(sig)
    if key not in _TABLES:
        raise ValueError(f"{key!r} is not a plane signature (classify: {classify(sig)})")
    if not (isinstance(cell_scale, (int, float)) and math.isfinite(cell_scale) and cell_scale > 0):
        raise ValueError(f"cell_scale must be a positive real, got {cell_scale!r}")
    s = float(cell_scale)
    lattice_raw, point_ops = _TABLES[key]
    lattice = (
        (lattice_raw[0][0] * s, lattice_raw[0][1] * s),
        (lattice_raw[1][0] * s, lattice_raw[1][1] * s),
    )
    gens = [
        Isometry2(_I, lattice[0]),
        Isometry2(_I, lattice[1]),
    ]
    gens.extend(Isometry2(m, (t[0] * s, t[1] * s)) for m, t in point_ops)
    reversing = any(g.orientation < 0 for g in gens)
    order = sig.max_rotation_order * (2 if reversing else 1)
    return WallpaperGroup(sig, lattice, tuple(gens), order)


# -- orbits ---------------------------------------------------------------


def _coset_reps(group: WallpaperGroup) -> list[Isometry2]:
    """One representative per group element modulo lattice translations.

    Translations are reduced to the fundamental cell; the closure must have
    exactly point_group_order elements.
    """
    lat = group.lattice_matrix
    lat_inv = np.linalg.inv(lat)

    def reduce(m: np.ndarray, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lam = lat_inv @ t
        frac = lam - np.floor(lam + 1e-9)
        frac[np.abs(frac) < 1e-9] = 0.0
        return m, lat @ frac

    seen: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}
    start = reduce(np.eye(2), np.zeros(2))
    queue = [start]
    seen[_key(*start)] = start
    gens = [(g.matrix, g.vector) for g in group.generators]
    while queue:
        m, t = queue.pop()
        for gm, gt in gens:
            nm, nt = reduce(gm @ m, gm @ t + gt)
            k = _key(nm, nt)
            if k not in seen:
                if len(seen) >= 64:
                    raise AssertionError("coset closure did not terminate")
                seen[k] = (nm, nt)
                queue.append((nm, nt))
    reps = [
        Isometry2(_as_mat(m), (float(t[0]), float(t[1])))
        for m, t in sorted(seen.values(), key=lambda mt: _key(*mt))
    ]
    assert len(reps) == group.point_group_order, (group.signature, len(reps))
    return reps


def orbit_isometries(group: WallpaperGroup, view: Viewport) -> list[Isometry2]:
    """All group elements whose image of the unit cell intersects the viewport.

    Deterministic order; deduplicated at 1e-9 on both linear part and
    translation.
    """
    lat = group.lattice_matrix
    lat_inv = np.linalg.inv(lat)
    e1, e2 = lat[:, 0], lat[:, 1]
    corners = np.array([[0.0, 0.0], e1, e2, e1 + e2])
    eps = 1e-9
    out: list[Isometry2] = []
    seen: set[tuple] = set()
    for rep in _coset_reps(group):
        img = rep.apply(corners)
        lo, hi = img.min(axis=0), img.max(axis=0)
        # lattice shifts v with [lo, hi] + v touching the viewport
        shift_lo = view.lo - hi - eps
        shift_hi = view.hi - lo + eps
        box = np.array(
            [
                [shift_lo[0], shift_lo[1]],
                [shift_lo[0], shift_hi[1]],
                [shift_hi[0], shift_lo[1]],
                [shift_hi[0], shift_hi[1]],
            ]
        )
        coeffs = box @ lat_inv.T
        a_lo, b_lo = np.ceil(coeffs.min(axis=0) - eps).astype(int)
        a_hi, b_hi = np.floor(coeffs.max(axis=0) + eps).astype(int)
        for a in range(a_lo, a_hi + 1):
            for b in range(b_lo, b_hi + 1):
                v = lat @ np.array([a, b], dtype=float)
                if np.any(lo + v > view.hi + eps) or np.any(hi + v < view.lo - eps):
                    continue
                t = rep.vector + v
                k = _key(rep.matrix, t)
                if k not in seen:
                    seen.add(k)
                    out.append(Isometry2(rep.linear, (float(t[0]), float(t[1]))))
    out.sort(key=lambda iso: _key(iso.matrix, iso.vector))
    return out


# -- stroke replication ----------------------------------------------------


def _clip_segment(p: np.ndarray, q: np.ndarray, view: Viewport) -> tuple[np.ndarray, np.ndarray] | None:
    """Liang-Barsky clip of segment pq to the viewport; None if invisible."""
    d = q - p
    t0, t1 = 0.0, 1.0
    for axis, (lo, hi) in enumerate(((view.xmin, view.xmax), (view.ymin, view.ymax))):
        for sign, bound in ((-1.0, lo), (1.0, hi)):
            denom = sign * d[axis]
            num = sign * (bound - p[axis])
            if abs(denom) < 1e-15:
                if num < 0:
                    return None
                continue
            t = num / denom
            if denom < 0:
                if t > t1:
                    return None
                t0 = max(t0, t)
            else:
                if t < t0:
                    return None
                t1 = min(t1, t)
    if t0 > t1:
        return None
    return p + t0 * d, p + t1 * d


def _inside(pt: np.ndarray, view: Viewport) -> bool:
    return bool(
        view.xmin - 1e-12 <= pt[0] <= view.xmax + 1e-12
        and view.ymin - 1e-12 <= pt[1] <= view.ymax + 1e-12
    )


def _clip_polyline(points: np.ndarray, view: Viewport) -> list[list[Vec]]:
    """Clip a polyline to a rectangle, splitting where it leaves the view."""
    if len(points) == 1:
        return [[(float(points[0][0]), float(points[0][1]))]] if _inside(points[0], view) else []
    pieces: list[list[Vec]] = []
    current: list[Vec] = []
    for i in range(len(points) - 1):
        clipped = _clip_segment(points[i], points[i + 1], view)
        if clipped is None:
            if len(current) > 1:
                pieces.append(current)
            current = []
            continue
        a, b = clipped
        pa = (float(a[0]), float(a[1]))
        pb = (float(b[0]), float(b[1]))
        if current and math.hypot(current[-1][0] - pa[0], current[-1][1] - pa[1]) < 1e-9:
            current.append(pb)
        else:
            if len(current) > 1:
                pieces.append(current)
            current = [pa, pb]
    if len(current) > 1:
        pieces.append(current)
    return pieces


def replicate(
    group: WallpaperGroup,
    strokes: Sequence[Sequence[Sequence[float]]],
    view: Viewport,
) -> list[list[Vec]]:
    """Apply every viewport-relevant group element to every stroke and clip.

    Coincident images (e.g. of strokes lying on a mirror) are all kept.
    """
    arrays: list[np.ndarray] = []
    for stroke in strokes:
        pts = np.asarray(stroke, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) == 0:
            raise ValueError("each stroke must be a non-empty list of [x, y] points")
        arrays.append(pts)
    out: list[list[Vec]] = []
    for iso in orbit_isometries(group, view):
        for pts in arrays:
            out.extend(_clip_polyline(iso.apply(pts), view))
    return out
