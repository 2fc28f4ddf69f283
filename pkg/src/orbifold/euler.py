"""Cost and curvature accounting for signatures, and signature enumeration.

Each feature of a signature has an exact price:

    handle            2
    cross-cap         1
    mirror boundary   1
    order-n cone      (n-1)/n
    order-n corner    (n-1)/(2n)

The Euler characteristic of the quotient is 2 minus the total price.  A
plane symmetry type must price out at exactly 2; sphere types cost less
than 2, and the symmetry group of a good sphere type has order 2/chi.
All arithmetic is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .notation import MirrorBoundary, OrbifoldSignature, signature

__all__ = [
    "cost",
    "euler_characteristic",
    "GeometryClass",
    "ConwayName",
    "classify",
    "is_bad",
    "is_trivial",
    "group_order",
    "conway_name",
    "WeightedMapCensus",
    "weighted_euler",
    "square_billiard_census",
    "enumerate_euclidean",
    "enumerate_spherical",
    "enumerate_by_chi",
]

_QUARTER = Fraction(1, 4)
_TWO = Fraction(2)


def cone_cost(order: int) -> Fraction:
    return Fraction(order - 1, order)


def corner_cost(order: int) -> Fraction:
    return Fraction(order - 1, 2 * order)


def cost(sig: OrbifoldSignature) -> Fraction:
    """Total price of the signature's features."""
    total = _TWO * sig.handles + Fraction(sig.crosscaps)
    for n in sig.cone_orders:
        total += cone_cost(n)
    for ring in sig.boundaries:
        total += 1
        for n in ring.corners:
            total += corner_cost(n)
    return total


def euler_characteristic(sig: OrbifoldSignature) -> Fraction:
    """Exact Euler characteristic of the quotient: 2 minus the cost."""
    return _TWO - cost(sig)


# -- classification -------------------------------------------------------


def is_bad(sig: OrbifoldSignature) -> bool:
    """True for the four configurations that are not quotients of a sphere.

    They are: a lone cone; two lone unequal cones; one mirror boundary with
    a single corner and nothing else; one mirror boundary with exactly two
    unequal corners and nothing else.
    """
    s = sig.canonical()
    if s.handles or s.crosscaps:
        return False
    if not s.boundaries:
        cones = s.cone_orders
        if len(cones) == 1:
            return True
        return len(cones) == 2 and cones[0] != cones[1]
    if len(s.boundaries) == 1 and not s.cone_orders:
        corners = s.boundaries[0].corners
        if len(corners) == 1:
            return True
        return len(corners) == 2 and corners[0] != corners[1]
    return False


def is_trivial(sig: OrbifoldSignature) -> bool:
    """True for the empty signature (no features at all)."""
    return sig.part_count == 0


@dataclass(frozen=True)
class GeometryClass:
    """Which geometry a signature's quotient carries.

    ``kind`` is one of ``'bad'``, ``'spherical'``, ``'euclidean'``,
    ``'hyperbolic'``; ``order`` is the symmetry group size for spherical
    kinds and None otherwise.
    """

    kind: str
    order: int | None = None

    def __str__(self) -> str:
        if self.kind == "spherical":
            return f"spherical order={self.order}"
        return self.kind


def group_order(sig: OrbifoldSignature) -> int:
    """Symmetry group size 2/chi for a good positive-characteristic signature."""
    chi = euler_characteristic(sig)
    if chi <= 0 or is_bad(sig):
        raise ValueError(f"{sig!r} does not describe a finite sphere symmetry type")
    k = _TWO / chi
    assert k.denominator == 1, sig
    return int(k)


def classify(sig: OrbifoldSignature) -> GeometryClass:
    """Sort a signature into bad / spherical / euclidean / hyperbolic."""
    if is_bad(sig):
        return GeometryClass("bad")
    chi = euler_characteristic(sig)
    if chi > 0:
        return GeometryClass("spherical", group_order(sig))
    if chi == 0:
        return GeometryClass("euclidean")
    return GeometryClass("hyperbolic")


# -- traditional names for the 17 plane types -----------------------------

_PREFIXES = {1: "mono", 2: "di", 3: "tri", 4: "tetra", 6: "hexa"}

_DESCRIPTORS = {
    "*632": "scopic",
    "*442": "scopic",
    "*333": "scopic",
    "*2222": "scopic",
    "**": "scopic",
    "632": "tropic",
    "442": "tropic",
    "333": "tropic",
    "2222": "tropic",
    "o": "tropic",
    "4*2": "gyro",
    "3*3": "gyro",
    "22*": "gyro",
    "22x": "glide",
    "xx": "glide",
    "2*22": "rhombic",
    "*x": "rhombic",
}


@dataclass(frozen=True)
class ConwayName:
    """A plane symmetry type's spoken name: numeric prefix + family descriptor."""

    prefix: str
    descriptor: str

    @property
    def full(self) -> str:
        return self.prefix + self.descriptor

    def __str__(self) -> str:
        return self.full


def conway_name(sig: OrbifoldSignature) -> ConwayName | None:
    """Name for one of the 17 plane signatures, or None for anything else."""
    from .notation import to_string

    descriptor = _DESCRIPTORS.get(to_string(sig))
    if descriptor is None:
        return None
    return ConwayName(_PREFIXES[sig.max_rotation_order], descriptor)


# -- weighted map census ---------------------------------------------------


@dataclass(frozen=True)
class WeightedMapCensus:
    """Counts of map elements with fractional weights, e.g. 1/k for pieces
    shared among k copies of a fundamental domain.

    Each entry is a (count, weight) pair.
    """

    vertices: tuple[tuple[int, Fraction], ...] = ()
    edges: tuple[tuple[int, Fraction], ...] = ()
    faces: tuple[tuple[int, Fraction], ...] = ()


def _census_sum(entries: Iterable[tuple[int, Fraction]]) -> Fraction:
    total = Fraction(0)
    for count, weight in entries:
        total += count * Fraction(weight)
    return total


def weighted_euler(census: WeightedMapCensus) -> Fraction:
    """Weighted V - E + F."""
    return _census_sum(census.vertices) - _census_sum(census.edges) + _census_sum(census.faces)


def square_billiard_census() -> WeightedMapCensus:
    """Census for a rectangle whose four sides are mirrors.

    The corners sit on two mirrors each (weight 1/4), the sides on one
    (weight 1/2), and the interior is a single whole face.
    """
    return WeightedMapCensus(
        vertices=((4, Fraction(1, 4)),),
        edges=((4, Fraction(1, 2)),),
        faces=((1, Fraction(1)),),
    )


# -- enumeration -----------------------------------------------------------
#
# Filling a budget with cone or corner costs uses the same recursion: parts
# are chosen in non-decreasing order of their order n, with cost
# (n-1)/(d*n) where d=1 for cones and d=2 for corners.  For an exact fill,
# the final part is solved from the residual; an intermediate part of cost
# c allows k >= 2 parts in total only if c <= r/k and the k-1 later parts
# (each < 1/d) can still reach r, which bounds n.


def _exact_fills(r: Fraction, d: int, min_order: int = 2) -> Iterator[tuple[int, ...]]:
    """Non-decreasing order tuples whose total cost is exactly ``r``."""
    if r < 0:
        return
    if r == 0:
        yield ()
        return
    if d * r < 1:
        # a single part finishes the fill: (n-1)/(d n) == r
        n = Fraction(1) / (1 - d * r)
        if n.denominator == 1 and n >= max(2, min_order):
            yield (int(n),)
    # at least two parts remain; the current one is the cheapest
    kmax = int(2 * d * r)  # every part costs at least 1/(2d)
    bound = 1
    for k in range(2, kmax + 1):
        if k > d * r:  # k parts each below 1/d can only reach r if k > d r
            bound = max(bound, int(Fraction(k) / (k - d * r)))
    for first in range(max(2, min_order), bound + 1):
        c = Fraction(first - 1, d * first)
        rest = r - c
        if rest < c:
            continue
        for tail in _exact_fills(rest, d, first):
            if tail:
                yield (first,) + tail


def _bounded_fills(budget: Fraction, d: int, max_order: int, min_order: int = 2) -> Iterator[tuple[int, ...]]:
    """Non-decreasing order tuples with orders <= max_order and cost <= budget."""
    if budget < 0:
        return
    yield ()
    for first in range(max(2, min_order), max_order + 1):
        c = Fraction(first - 1, d * first)
        if c > budget:
            break
        for tail in _bounded_fills(budget - c, d, max_order, first):
            yield (first,) + tail


def _fill_cost(orders: Sequence[int], d: int) -> Fraction:
    return sum((Fraction(n - 1, d * n) for n in orders), Fraction(0))


def _multiset_partitions(items: tuple[int, ...], m: int) -> set[tuple[tuple[int, ...], ...]]:
    """Distinct distributions of a multiset into m unlabeled (possibly empty) groups."""
    results: set[tuple[tuple[int, ...], ...]] = set()
    groups: list[list[int]] = [[] for _ in range(m)]

    def place(i: int) -> None:
        if i == len(items):
            results.add(tuple(sorted(tuple(g) for g in groups)))
            return
        seen: set[tuple[int, ...]] = set()
        for g in groups:
            key = tuple(g)
            if key in seen:
                continue
            seen.add(key)
            g.append(items[i])
            place(i + 1)
            g.pop()

    place(0)
    return results


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All distinct orderings of a multiset."""
    counts: dict[int, int] = {}
    for it in items:
        counts[it] = counts.get(it, 0) + 1
    keys = sorted(counts)
    out: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(out) == len(items):
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from extend()
                out.pop()
                counts[k] += 1

    yield from extend()


def _bracelets(orders: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Distinct cyclic corner sequences of a multiset, up to rotation and reversal."""
    from .notation import _cycle_canonical

    if len(orders) <= 3:
        # with three or fewer corners every arrangement is one cycle class
        return [_cycle_canonical(tuple(orders))]
    # fix the largest order first; every cycle class has such a representative
    rest = sorted(orders)
    biggest = rest.pop()
    reps = {_cycle_canonical((biggest,) + perm) for perm in _distinct_permutations(rest)}
    return sorted(reps, reverse=True)


def _assemble(
    handles: int,
    crosscaps: int,
    cones: tuple[int, ...],
    corner_groups: Iterable[tuple[tuple[int, ...], ...]],
) -> Iterator[OrbifoldSignature]:
    """Expand corner multiset groups into all inequivalent boundary cycles."""
    for groups in corner_groups:
        ring_choices = [_bracelets(g) for g in groups]
        for rings in itertools.product(*ring_choices):
            yield signature(handles, cones, rings, crosscaps)


def _enumerate_exact_cost(total: Fraction) -> frozenset[OrbifoldSignature]:
    """All canonical signatures whose cost is exactly ``total`` (total <= 2)."""
    assert total <= 2, "exact search is only used for plane/sphere budgets"
    out: set[OrbifoldSignature] = set()
    for handles in range(int(total // 2) + 1):
        for crosscaps in range(int(total - 2 * handles) + 1):
            for mirrors in range(int(total - 2 * handles - crosscaps) + 1):
                base = 2 * handles + crosscaps + mirrors
                residual = total - base
                if residual < 0:
                    continue
                if mirrors == 0:
                    for cones in _exact_fills(residual, d=1):
                        out.update(_assemble(handles, crosscaps, cones, [()]))
                    continue
                # cones leave either nothing or at least one corner's worth
                cone_choices = list(_exact_fills(residual, d=1))
                cheap = residual - _QUARTER
                if cheap >= 0:
                    cap = int(Fraction(1) / (1 - cheap)) if cheap < 1 else None
                    assert cap is not None  # residual <= 1 once a mirror is bought
                    cone_choices.extend(_bounded_fills(cheap, d=1, max_order=cap))
                for cones in set(cone_choices):
                    remainder = residual - _fill_cost(cones, 1)
                    for corners in _exact_fills(remainder, d=2):
                        groups = _multiset_partitions(corners, mirrors)
                        out.update(_assemble(handles, crosscaps, cones, groups))
    for sig in out:
        assert sig.part_count <= 8
        assert cost(sig) == total
    return frozenset(out)


def _enumerate_cost_range(
    lo: Fraction,
    hi: Fraction,
    max_order: int,
    *,
    hi_strict: bool = False,
) -> frozenset[OrbifoldSignature]:
    """All canonical signatures with cost in [lo, hi] and orders <= max_order."""
    out: set[OrbifoldSignature] = set()

    def in_range(c: Fraction) -> bool:
        if c < lo:
            return False
        return c < hi if hi_strict else c <= hi

    for handles in range(int(hi // 2) + 1):
        for crosscaps in range(int(hi - 2 * handles) + 1):
            for mirrors in range(int(hi - 2 * handles - crosscaps) + 1):
                base = 2 * handles + crosscaps + mirrors
                budget = hi - base
                if budget < 0:
                    continue
                for cones in _bounded_fills(budget, d=1, max_order=max_order):
                    cone_total = _fill_cost(cones, 1)
                    corner_budget = budget - cone_total
                    corner_fills: Iterable[tuple[int, ...]]
                    if mirrors == 0:
                        corner_fills = [()]
                    else:
                        corner_fills = _bounded_fills(corner_budget, d=2, max_order=max_order)
                    for corners in corner_fills:
                        total = base + cone_total + _fill_cost(corners, 2)
                        if not in_range(total):
                            continue
                        groups = _multiset_partitions(corners, mirrors) if mirrors else [()]
                        for sig in _assemble(handles, crosscaps, cones, groups):
                            assert sig.part_count <= 4 * hi
                            out.add(sig)
    return frozenset(out)


def enumerate_euclidean() -> frozenset[OrbifoldSignature]:
    """The signatures that price out at exactly 2: the 17 plane types."""
    return _enumerate_exact_cost(_TWO)


def enumerate_spherical(max_order: int) -> frozenset[OrbifoldSignature]:
    """All good sphere signatures with every order <= max_order.

    Includes the trivial empty signature; excludes the four bad families.
    """
    if not isinstance(max_order, int) or max_order < 2:
        raise ValueError(f"max_order must be an integer >= 2, got {max_order!r}")
    found = _enumerate_cost_range(Fraction(0), _TWO, max_order, hi_strict=True)
    return frozenset(s for s in found if not is_bad(s))


def enumerate_by_chi(
    chi_min: Fraction | int,
    chi_max: Fraction | int,
    max_order: int,
) -> frozenset[OrbifoldSignature]:
    """All good signatures with chi_min <= chi <= chi_max and orders <= max_order.

    With a negative range this enumerates hyperbolic types; the range may
    also cover 0 and positive values, in which case plane and sphere types
    appear too.
    """
    lo_chi, hi_chi = Fraction(chi_min), Fraction(chi_max)
    if lo_chi > hi_chi:
        raise ValueError("chi_min must not exceed chi_max")
    if not isinstance(max_order, int) or max_order < 2:
        raise ValueError(f"max_order must be an integer >= 2, got {max_order!r}")
    found = _enumerate_cost_range(_TWO - hi_chi, _TWO - lo_chi, max_order)
    return frozenset(s for s in found if not is_bad(s))
