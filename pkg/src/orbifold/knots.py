"""Closed curves in the plane as signed double-occurrence codes.

A curve that crosses itself n times is recorded by reading off crossing
labels along a traversal: each label appears exactly twice, and a sign per
crossing fixes the local rotation (which way the second strand crosses the
first).  The sign convention: a crossing's sign is its handedness in the
alternating diagram whose very first passage goes over; equivalently the
local rotation is the positive one iff sign * (-1)^(first visit position)
is positive.  Face tracing on the induced 4-valent map certifies planarity
(F = n + 2), and over/under assignments on top of a valid curve give knot
diagrams with checkerboard colorings and a 3-coloring invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

__all__ = [
    "KnotError",
    "GaussCode",
    "KnotDiagram",
    "FaceColoring",
    "parse_code",
    "parse_diagram",
    "validate",
    "faces",
    "all_diagrams",
    "descending_diagram",
    "alternating_diagrams",
    "checkerboard",
    "arc_count",
    "tricolor_count",
    "tricolor_count_bruteforce",
    "mirror",
    "reverse",
    "relabel",
    "CatalogEntry",
    "planar_signing",
    "catalog",
]


class KnotError(ValueError):
    """Raised for ill-formed or non-planar crossing codes."""


Dart = tuple[int, int]  # (edge index, end: 0 = tail/outgoing, 1 = head/incoming)


@dataclass(frozen=True)
class GaussCode:
    """A signed double-occurrence sequence: 2n tokens (label, sign).

    Labels must be exactly 1..n, each appearing twice with a consistent
    sign.  ``labels[p]`` is the crossing passed at step p of the traversal;
    edge p of the induced 4-valent map runs from passage p to passage p+1
    (cyclically).
    """

    labels: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.signs):
            raise KnotError("labels and signs must have equal length")
        if len(self.labels) % 2:
            raise KnotError("a closed curve has an even number of passages")
        counts: dict[int, list[int]] = {}
        for p, lab in enumerate(self.labels):
            counts.setdefault(lab, []).append(p)
        n = len(self.labels) // 2
        if set(counts) != set(range(1, n + 1)):
            raise KnotError(f"labels must be exactly 1..{n}")
        for lab, positions in counts.items():
            if len(positions) != 2:
                raise KnotError(f"label {lab} appears {len(positions)} times (need exactly 2)")
            i, j = positions
            if self.signs[i] != self.signs[j]:
                raise KnotError(f"label {lab} carries two different signs")
        for s in self.signs:
            if s not in (1, -1):
                raise KnotError("signs must be +1 or -1")

    @property
    def n(self) -> int:
        """Number of crossings."""
        return len(self.labels) // 2

    def occurrences(self) -> dict[int, tuple[int, int]]:
        """label -> (first visit position, second visit position)."""
        occ: dict[int, list[int]] = {}
        for p, lab in enumerate(self.labels):
            occ.setdefault(lab, []).append(p)
        return {lab: (ps[0], ps[1]) for lab, ps in occ.items()}

    def sign_of(self, label: int) -> int:
        i, _ = self.occurrences()[label]
        return self.signs[i]

    def __str__(self) -> str:
        return " ".join(
            f"{lab}{'+' if s > 0 else '-'}" for lab, s in zip(self.labels, self.signs)
        )


@dataclass(frozen=True)
class KnotDiagram:
    """A valid curve plus one over/under choice per crossing.

    ``over_first[k-1]`` is True when crossing k's first visit goes over.
    """

    code: GaussCode
    over_first: tuple[bool, ...]

    def __post_init__(self):
        if len(self.over_first) != self.code.n:
            raise KnotError("need exactly one over/under choice per crossing")
        object.__setattr__(self, "over_first", tuple(bool(o) for o in self.over_first))

    def __str__(self) -> str:
        marks = ",".join(
            f"{'O' if o else 'U'}{k}" for k, o in enumerate(self.over_first, start=1)
        )
        base = str(self.code)
        return f"{base} /{marks}" if base else f"/{marks}"


@dataclass(frozen=True)
class FaceColoring:
    """A black/white color per face of the curve's 4-valent map."""

    faces: tuple[tuple[Dart, ...], ...]
    colors: tuple[str, ...]

    def __post_init__(self):
        if len(self.faces) != len(self.colors):
            raise KnotError("need one color per face")
        for c in self.colors:
            if c not in ("black", "white"):
                raise KnotError("colors must be 'black' or 'white'")


# -- text form ----------------------------------------------------------------


def parse_code(text: str) -> GaussCode:
    """Parse tokens like ``1+ 2+ 3+ 1+ 2+ 3+`` (empty string: plain loop)."""
    labels: list[int] = []
    signs: list[int] = []
    for tok in text.split():
        body, suffix = tok[:-1], tok[-1:]
        if suffix not in ("+", "-"):
            raise KnotError(f"token {tok!r} must end in + or -")
        if not body.isdigit():
            raise KnotError(f"token {tok!r} must be <label><sign>")
        labels.append(int(body))
        signs.append(1 if suffix == "+" else -1)
    return GaussCode(tuple(labels), tuple(signs))


def parse_diagram(text: str) -> KnotDiagram:
    """Parse ``<code> /O1,U2,...`` (assignment marks after a slash)."""
    if "/" not in text:
        raise KnotError("diagram text needs a /O1,U2,... assignment suffix")
    code_part, _, marks_part = text.partition("/")
    code = parse_code(code_part)
    over = [False] * code.n
    seen: set[int] = set()
    marks = [m for m in marks_part.strip().split(",") if m.strip()]
    for mark in marks:
        mark = mark.strip()
        if len(mark) < 2 or mark[0] not in ("O", "U") or not mark[1:].isdigit():
            raise KnotError(f"assignment mark {mark!r} must be O<label> or U<label>")
        lab = int(mark[1:])
        if not 1 <= lab <= code.n:
            raise KnotError(f"assignment mark {mark!r} names an unknown crossing")
        if lab in seen:
            raise KnotError(f"crossing {lab} assigned twice")
        seen.add(lab)
        over[lab - 1] = mark[0] == "O"
    if len(seen) != code.n:
        raise KnotError("every crossing needs exactly one O/U mark")
    return KnotDiagram(code, tuple(over))


# -- rotation system and faces -------------------------------------------------


def _sigma(code: GaussCode) -> dict[Dart, Dart]:
    """Counterclockwise successor of each dart around its crossing."""
    m = len(code.labels)
    occ = code.occurrences()
    sigma: dict[Dart, Dart] = {}
    for lab, (i, j) in occ.items():
        chir = code.signs[i] * (1 if i % 2 == 0 else -1)
        out_i: Dart = (i, 0)
        out_j: Dart = (j, 0)
        in_i: Dart = ((i - 1) % m, 1)
        in_j: Dart = ((j - 1) % m, 1)
        if chir > 0:
            cyc = (out_i, out_j, in_i, in_j)
        else:
            cyc = (out_i, in_j, in_i, out_j)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            sigma[a] = b
    return sigma


def faces(code: GaussCode) -> tuple[tuple[Dart, ...], ...]:
    """Face cycles of the curve's map: orbits of dart -> sigma(alpha(dart))."""
    if code.n == 0:
        return ((), ())
    sigma = _sigma(code)
    visited: set[Dart] = set()
    out: list[tuple[Dart, ...]] = []
    for start in sorted(sigma):
        if start in visited:
            continue
        cycle: list[Dart] = []
        cur = start
        while cur not in visited:
            visited.add(cur)
            cycle.append(cur)
            cur = sigma[(cur[0], 1 - cur[1])]
        out.append(tuple(cycle))
    return tuple(out)


def validate(code: GaussCode) -> int:
    """Face count of the curve's map; raises unless it is planar (F = n+2)."""
    f = len(faces(code))
    if f != code.n + 2:
        raise KnotError(
            f"code is not planar: face tracing gives F={f} for n={code.n} (need n+2)"
        )
    return f


# -- diagrams -------------------------------------------------------------------


def all_diagrams(code: GaussCode) -> list[KnotDiagram]:
    """All 2^n over/under assignments, in lexicographic bit order (O before U)."""
    validate(code)
    out = []
    for bits in itertools.product((0, 1), repeat=code.n):
        out.append(KnotDiagram(code, tuple(b == 0 for b in bits)))
    return out


def descending_diagram(code: GaussCode) -> KnotDiagram:
    """The assignment where every crossing's first visit goes over."""
    validate(code)
    return KnotDiagram(code, (True,) * code.n)


def alternating_diagrams(code: GaussCode) -> tuple[KnotDiagram, KnotDiagram]:
    """The two assignments in which the traversal strictly alternates
    over, under, over, ... (they are bitwise complements)."""
    validate(code)
    occ = code.occurrences()
    first_bits = []
    second_bits = []
    for lab in range(1, code.n + 1):
        i, j = occ[lab]
        if (i + j) % 2 == 0:
            raise KnotError("crossing visits share parity; no alternating assignment")
        first_bits.append(i % 2 == 0)
        second_bits.append(i % 2 == 1)
    return (
        KnotDiagram(code, tuple(first_bits)),
        KnotDiagram(code, tuple(second_bits)),
    )


def mirror(diagram: KnotDiagram) -> KnotDiagram:
    """Swap over and under at every crossing."""
    return KnotDiagram(diagram.code, tuple(not b for b in diagram.over_first))


def reverse(code: GaussCode) -> GaussCode:
    """The code read along the reversed traversal (signs adjusted so the
    curve's map is the same one)."""
    occ = code.occurrences()
    m = len(code.labels)
    new_sign = {lab: code.signs[i] * (1 if (i + j) % 2 == 0 else -1) for lab, (i, j) in occ.items()}
    labels = tuple(reversed(code.labels))
    signs = tuple(new_sign[lab] for lab in labels)
    return GaussCode(labels, signs)


def relabel(code: GaussCode, mapping: Mapping[int, int]) -> GaussCode:
    """Rename crossings by a permutation of 1..n."""
    n = code.n
    if sorted(mapping) != list(range(1, n + 1)) or sorted(mapping.values()) != list(
        range(1, n + 1)
    ):
        raise KnotError("mapping must be a permutation of 1..n")
    return GaussCode(tuple(mapping[lab] for lab in code.labels), code.signs)


# -- checkerboard colorings ------------------------------------------------------


def checkerboard(code: GaussCode) -> tuple[FaceColoring, FaceColoring]:
    """The two proper black/white colorings of the faces (global swap pair)."""
    validate(code)
    fs = faces(code)
    if code.n == 0:
        return (
            FaceColoring(fs, ("black", "white")),
            FaceColoring(fs, ("white", "black")),
        )
    face_of: dict[Dart, int] = {}
    for idx, f in enumerate(fs):
        for d in f:
            face_of[d] = idx
    adj: dict[int, set[int]] = {i: set() for i in range(len(fs))}
    for edge in range(len(code.labels)):
        a, b = face_of[(edge, 0)], face_of[(edge, 1)]
        adj[a].add(b)
        adj[b].add(a)
    color = {0: 0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nb in adj[cur]:
            if nb not in color:
                color[nb] = 1 - color[cur]
                stack.append(nb)
            elif color[nb] == color[cur]:
                raise KnotError("face adjacency is not two-colorable")
    if len(color) != len(fs):
        raise KnotError("face adjacency graph is disconnected")
    first = tuple("black" if color[i] == 0 else "white" for i in range(len(fs)))
    second = tuple("white" if c == "black" else "black" for c in first)
    return (FaceColoring(fs, first), FaceColoring(fs, second))


# -- arcs and 3-colorings ---------------------------------------------------------


def _arc_of_edge(diagram: KnotDiagram) -> tuple[list[int], int]:
    """Arc index per edge; arcs are maximal runs between under-passages."""
    code = diagram.code
    m = len(code.labels)
    if code.n == 0:
        return [], 1
    occ = code.occurrences()
    cuts = sorted(
        (j if diagram.over_first[lab - 1] else i) for lab, (i, j) in occ.items()
    )
    arc = [0] * m
    for idx, start in enumerate(cuts):
        end = cuts[(idx + 1) % len(cuts)]
        p = start
        while True:
            arc[p] = idx
            p = (p + 1) % m
            if p == end:
                break
    return arc, len(cuts)


def arc_count(diagram: KnotDiagram) -> int:
    """Number of arcs (strand runs between under-passages)."""
    _, k = _arc_of_edge(diagram)
    return k


def _crossing_rows(diagram: KnotDiagram) -> tuple[list[list[int]], int]:
    """Mod-3 constraint rows: over + under-in + under-out = 0 per crossing."""
    code = diagram.code
    m = len(code.labels)
    occ = code.occurrences()
    arc, k = _arc_of_edge(diagram)
    rows = []
    for lab in range(1, code.n + 1):
        i, j = occ[lab]
        over_pos = i if diagram.over_first[lab - 1] else j
        under_pos = j if diagram.over_first[lab - 1] else i
        row = [0] * k
        row[arc[over_pos]] = (row[arc[over_pos]] + 1) % 3
        row[arc[(under_pos - 1) % m]] = (row[arc[(under_pos - 1) % m]] + 1) % 3
        row[arc[under_pos]] = (row[arc[under_pos]] + 1) % 3
        rows.append(row)
    return rows, k


def _gf3_rank(rows: list[list[int]]) -> int:
    mat = [row[:] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] % 3:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 if mat[rank][col] % 3 == 1 else 2
        mat[rank] = [(v * inv) % 3 for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % 3:
                factor = mat[r][col] % 3
                mat[r] = [(a - factor * b) % 3 for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def tricolor_count(diagram: KnotDiagram) -> int:
    """Number of 3-color arc labelings where each crossing's three incident
    arcs are all equal or all distinct (a power of 3; 3 is the floor)."""
    validate(diagram.code)
    if diagram.code.n == 0:
        return 3
    rows, k = _crossing_rows(diagram)
    return 3 ** (k - _gf3_rank(rows))


def tricolor_count_bruteforce(diagram: KnotDiagram) -> int:
    """Direct enumeration over all 3^arcs labelings (small n only)."""
    validate(diagram.code)
    if diagram.code.n == 0:
        return 3
    rows, k = _crossing_rows(diagram)
    count = 0
    for assignment in itertools.product((0, 1, 2), repeat=k):
        if all(sum(c * a for c, a in zip(row, assignment)) % 3 == 0 for row in rows):
            count += 1
    return count


# -- a small catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """A named small knot: its crossing word and a planar signing."""

    name: str
    crossings: int
    code: GaussCode


_CATALOG_WORDS: dict[str, tuple[int, ...]] = {
    "3-1": (1, 2, 3, 1, 2, 3),
    "4-1": (1, 2, 3, 1, 4, 3, 2, 4),
    "5-1": (1, 2, 3, 4, 5, 1, 2, 3, 4, 5),
    "5-2": (1, 2, 3, 1, 4, 5, 2, 3, 5, 4),
    "6-1": (1, 2, 3, 1, 4, 5, 6, 3, 2, 6, 5, 4),
    "6-2": (1, 2, 3, 1, 4, 5, 6, 3, 2, 4, 5, 6),
    "6-3": (1, 2, 3, 1, 4, 5, 2, 3, 6, 4, 5, 6),
}


def planar_signing(word: Sequence[int]) -> GaussCode:
    """First sign vector (in +,- lexicographic order) making the word planar."""
    n = len(word) // 2
    for combo in itertools.product((1, -1), repeat=n):
        signs = tuple(combo[lab - 1] for lab in word)
        try:
            code = GaussCode(tuple(word), signs)
            validate(code)
        except KnotError:
            continue
        return code
    raise KnotError("word admits no planar signing")


def catalog() -> tuple[CatalogEntry, ...]:
    """Named knots with up to six crossings, each as a validated planar code."""
    entries = []
    for name in sorted(_CATALOG_WORDS):
        word = _CATALOG_WORDS[name]
        code = planar_signing(word)
        entries.append(CatalogEntry(name, len(word) // 2, code))
    return tuple(entries)
