"""Signatures for symmetry types of patterns: parsing, canonical form, printing.

A signature is a word read left to right:

    'o'* order* ('*' order*)* 'x'*

where an order is a single digit 2-9 or a parenthesized integer >= 2,
e.g. '(12)'.  'o' counts handles, each '*' opens a mirror boundary whose
following orders are corner orders in cyclic sequence, and 'x' counts
cross-caps.  The Unicode aliases '•' (bullet, for 'o') and
'°'/'×' (degree / times, for 'x') are accepted on input only;
output is always ASCII.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "SignatureError",
    "MirrorBoundary",
    "OrbifoldSignature",
    "parse",
    "to_string",
    "canonicalize",
    "signature",
]


class SignatureError(ValueError):
    """Raised for text that is not a well-formed signature.

    ``position`` is the 0-based index of the offending character, or the
    position where input ended prematurely.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def _check_order(n: object, what: str) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise SignatureError(f"{what} must be an integer, got {n!r}")
    if n < 2:
        raise SignatureError(f"{what} must be >= 2, got {n}")
    return n


def _cycle_canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Greatest tuple over all rotations of ``seq`` and of its reversal."""
    if len(seq) <= 1:
        return seq
    best = seq
    for base in (seq, seq[::-1]):
        for i in range(len(base)):
            rot = base[i:] + base[:i]
            if rot > best:
                best = rot
    return best


@dataclass(frozen=True, eq=False)
class MirrorBoundary:
    """One mirror boundary with its cyclic sequence of corner orders.

    The corner sequence is a cycle that may also be traversed backwards, so
    equality and hashing use the canonical rotation/reversal representative.
    """

    corners: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "corners", tuple(self.corners))
        for n in self.corners:
            _check_order(n, "corner order")

    def canonical(self) -> "MirrorBoundary":
        return MirrorBoundary(_cycle_canonical(self.corners))

    @property
    def is_canonical(self) -> bool:
        return self.corners == _cycle_canonical(self.corners)

    def _key(self) -> tuple[int, ...]:
        return _cycle_canonical(self.corners)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MirrorBoundary):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(("MirrorBoundary", self._key()))

    def __repr__(self) -> str:
        return f"MirrorBoundary({self.corners!r})"


@dataclass(frozen=True, eq=False)
class OrbifoldSignature:
    """A full signature: handles, cone orders, mirror boundaries, cross-caps.

    Instances may be structurally valid but non-canonical (unsorted parts,
    non-canonical corner rotations); :meth:`canonical` returns the canonical
    representative.  Equality and hashing ignore representation differences
    that :meth:`canonical` removes.
    """

    handles: int = 0
    cone_orders: tuple[int, ...] = ()
    boundaries: tuple[MirrorBoundary, ...] = ()
    crosscaps: int = 0

    def __post_init__(self):
        if not isinstance(self.handles, int) or self.handles < 0:
            raise SignatureError(f"handle count must be a non-negative integer, got {self.handles!r}")
        if not isinstance(self.crosscaps, int) or self.crosscaps < 0:
            raise SignatureError(f"cross-cap count must be a non-negative integer, got {self.crosscaps!r}")
        object.__setattr__(self, "cone_orders", tuple(self.cone_orders))
        object.__setattr__(
            self,
            "boundaries",
            tuple(b if isinstance(b, MirrorBoundary) else MirrorBoundary(tuple(b)) for b in self.boundaries),
        )
        for n in self.cone_orders:
            _check_order(n, "cone order")

    # -- canonical form -------------------------------------------------

    def _key(self):
        cones = tuple(sorted(self.cone_orders, reverse=True))
        rings = tuple(sorted((b._key() for b in self.boundaries), reverse=True))
        return (self.handles, cones, rings, self.crosscaps)

    def canonical(self) -> "OrbifoldSignature":
        handles, cones, rings, crosscaps = self._key()
        return OrbifoldSignature(handles, cones, tuple(MirrorBoundary(r) for r in rings), crosscaps)

    @property
    def is_canonical(self) -> bool:
        c = self.canonical()
        return (
            self.cone_orders == c.cone_orders
            and tuple(b.corners for b in self.boundaries) == tuple(b.corners for b in c.boundaries)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrbifoldSignature):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"<OrbifoldSignature {to_string(self)!r}>"

    # -- convenience ----------------------------------------------------

    @property
    def part_count(self) -> int:
        """Number of purchased features: handles, cones, mirrors, corners, cross-caps."""
        return (
            self.handles
            + len(self.cone_orders)
            + len(self.boundaries)
            + sum(len(b.corners) for b in self.boundaries)
            + self.crosscaps
        )

    @property
    def max_rotation_order(self) -> int:
        """Largest cone or corner order present; 1 when there are none."""
        orders = list(self.cone_orders)
        for b in self.boundaries:
            orders.extend(b.corners)
        return max(orders, default=1)

    @property
    def has_mirrors(self) -> bool:
        return bool(self.boundaries)


def signature(
    handles: int = 0,
    cones: Iterable[int] = (),
    boundaries: Iterable[Iterable[int]] = (),
    crosscaps: int = 0,
) -> OrbifoldSignature:
    """Build a canonical signature from plain parts."""
    sig = OrbifoldSignature(handles, tuple(cones), tuple(MirrorBoundary(tuple(b)) for b in boundaries), crosscaps)
    return sig.canonical()


def canonicalize(sig: OrbifoldSignature) -> OrbifoldSignature:
    """Return the canonical representative of a structurally valid signature."""
    return sig.canonical()


# -- parsing ------------------------------------------------------------

_HANDLE_CHARS = {"o", "•"}
_CROSSCAP_CHARS = {"x", "°", "×"}


def _tokens(text: str) -> Iterator[tuple[int, str, int]]:
    """Yield (position, kind, value) with kind in {'o', '*', 'x', 'order'}."""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _HANDLE_CHARS:
            yield i, "o", 0
            i += 1
        elif ch in _CROSSCAP_CHARS:
            yield i, "x", 0
            i += 1
        elif ch == "*":
            yield i, "*", 0
            i += 1
        elif ch.isdigit():
            if ch in "01":
                raise SignatureError(f"order must be >= 2, got {ch}", i)
            yield i, "order", int(ch)
            i += 1
        elif ch == "(":
            j = text.find(")", i + 1)
            if j < 0:
                raise SignatureError("unclosed '('", i)
            body = text[i + 1 : j]
            if not body.isdigit():
                raise SignatureError(f"expected an integer inside parentheses, got {body!r}", i + 1)
            n = int(body)
            if n < 2:
                raise SignatureError(f"order must be >= 2, got {n}", i + 1)
            yield i, "order", n
            i = j + 1
        else:
            raise SignatureError(f"unexpected character {ch!r}", i)


def parse(text: str) -> OrbifoldSignature:
    """Parse signature text into its canonical :class:`OrbifoldSignature`.

    The empty string is the trivial signature (plain sphere pattern).
    """
    handles = 0
    cones: list[int] = []
    rings: list[list[int]] = []
    crosscaps = 0
    # phases: 0 handles, 1 cones, 2 inside mirror boundaries, 3 cross-caps
    phase = 0
    for pos, kind, value in _tokens(text):
        if kind == "o":
            if phase > 0:
                if phase >= 2:
                    raise SignatureError("handle after a mirror boundary", pos)
                raise SignatureError("handle after a cone order", pos)
            handles += 1
        elif kind == "order":
            if phase == 3:
                raise SignatureError("order after a cross-cap", pos)
            if phase <= 1:
                phase = 1
                cones.append(value)
            else:
                rings[-1].append(value)
        elif kind == "*":
            if phase == 3:
                raise SignatureError("mirror after a cross-cap", pos)
            phase = 2
            rings.append([])
        else:  # 'x'
            phase = 3
            crosscaps += 1
    sig = OrbifoldSignature(handles, tuple(cones), tuple(MirrorBoundary(tuple(r)) for r in rings), crosscaps)
    return sig.canonical()


def _order_str(n: int) -> str:
    return str(n) if n < 10 else f"({n})"


def to_string(sig: OrbifoldSignature) -> str:
    """Format a signature as canonical ASCII text."""
    c = sig.canonical()
    parts = ["o" * c.handles]
    parts.extend(_order_str(n) for n in c.cone_orders)
    for b in c.boundaries:
        parts.append("*")
        parts.extend(_order_str(n) for n in b.corners)
    parts.append("x" * c.crosscaps)
    return "".join(parts)
