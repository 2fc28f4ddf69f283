"""Orbifold symbol parsing, canonicalization, and formatting."""

import random

import pytest

from orbifold.notation import (
    MirrorBoundary,
    OrbifoldSignature,
    SignatureError,
    canonicalize,
    parse,
    signature,
    to_string,
)


CANONICAL_ROUND_TRIPS = [
    "",
    "o",
    "oo",
    "x",
    "xx",
    "*",
    "**",
    "*x",
    "22",
    "2222",
    "333",
    "442",
    "632",
    "22x",
    "2*22",
    "22*",
    "3*3",
    "4*2",
    "*222",
    "*333",
    "*442",
    "*632",
    "*532",
    "532",
    "o22",
    "o*2",
    "ox",
    "32*22x",
    "*(12)3",
    "(11)(10)2",
    "*2*",
    "*32*2",
]


def test_round_trip_canonical_strings():
    for text in CANONICAL_ROUND_TRIPS:
        sig = parse(text)
        assert to_string(sig) == text, text
        assert sig.is_canonical
        assert parse(to_string(sig)) == sig


def test_unicode_synonyms():
    assert parse("•22") == parse("o22")
    assert parse("22×") == parse("22x")
    assert parse("°") == parse("x")
    assert to_string(parse("•2×")) == "o2x"


def test_cone_orders_sort_descending():
    assert to_string(parse("234")) == "432"
    assert to_string(parse("2(12)3")) == "(12)32"


def test_corner_cycle_greatest_representative():
    # Rotations and reversal of a corner cycle are identities; the stored
    # and printed form is the lexicographically greatest representative.
    assert to_string(parse("*232")) == "*322"
    assert to_string(parse("*223")) == "*322"
    assert parse("*3232") == parse("*2323")
    assert parse("*3232") != parse("*3322")
    assert to_string(parse("*2323")) == "*3232"
    assert to_string(parse("*23224")) == "*42322"


def test_boundaries_sorted_across_rings():
    assert to_string(parse("*2*3")) == "*3*2"
    assert to_string(parse("**22")) == "*22*"


def test_signature_constructor_canonicalizes():
    sig = signature(boundaries=[(2, 3, 2)])
    assert to_string(sig) == "*322"
    sig = signature(cones=[2, 4, 3], crosscaps=1)
    assert to_string(sig) == "432x"
    sig = signature(handles=1, boundaries=[(), (4, 2)])
    assert to_string(sig) == "o*42*"


def test_parenthesized_orders():
    sig = parse("*(12)3")
    assert tuple(b.corners for b in sig.boundaries) == ((12, 3),)
    assert to_string(parse("(10)(11)")) == "(11)(10)"


def test_equality_and_hash():
    a = parse("*3232")
    b = parse("*2323")
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_canonicalize_non_canonical_instance():
    raw = OrbifoldSignature(0, (2, 4, 3), (MirrorBoundary((2, 3, 2)),), 0)
    assert not raw.is_canonical
    fixed = canonicalize(raw)
    assert fixed.is_canonical
    assert to_string(fixed) == "432*322"
    assert raw == fixed  # equality ignores representation differences
    assert canonicalize(fixed) == fixed


def test_signature_is_immutable():
    sig = parse("*442")
    with pytest.raises(Exception):
        sig.cone_orders = (5,)  # type: ignore[misc]


@pytest.mark.parametrize(
    "bad",
    [
        "1",
        "0",
        "a",
        "2a",
        "*o",
        "2o",
        "x2",
        "x*",
        "xo",
        "(12",
        "()",
        "(1)",
        "(0)",
        "( 12)",
        "2 2x*",
        "-2",
    ],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(SignatureError):
        parse(bad)


def test_parse_error_reports_position():
    with pytest.raises(SignatureError) as err:
        parse("22o")
    assert err.value.position == 2
    assert "position 2" in str(err.value)


def test_signature_constructor_validates():
    with pytest.raises(SignatureError):
        signature(cones=[1])
    with pytest.raises(SignatureError):
        signature(handles=-1)
    with pytest.raises(SignatureError):
        signature(boundaries=[(0,)])
    with pytest.raises(SignatureError):
        signature(crosscaps=-2)


def test_fuzz_round_trip_and_no_crashes():
    rng = random.Random(20260819)
    for _ in range(500):
        handles = rng.randrange(0, 3)
        crosscaps = rng.randrange(0, 3)
        cones = [rng.randrange(2, 14) for _ in range(rng.randrange(0, 4))]
        rings = [
            tuple(rng.randrange(2, 14) for _ in range(rng.randrange(0, 5)))
            for _ in range(rng.randrange(0, 3))
        ]
        sig = signature(
            handles=handles, cones=cones, boundaries=rings, crosscaps=crosscaps
        )
        text = to_string(sig)
        assert parse(text) == sig
        assert sig.is_canonical

    alphabet = "ox*023(9)•×°"
    for _ in range(500):
        text = "".join(
            rng.choice(alphabet) for _ in range(rng.randrange(0, 9))
        )
        try:
            sig = parse(text)
        except SignatureError:
            continue
        assert isinstance(sig, OrbifoldSignature)
        assert parse(to_string(sig)) == sig
