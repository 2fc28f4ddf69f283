"""Exact curvature accounting, classification, names, and enumeration."""

import time
from fractions import Fraction

import pytest

from orbifold.euler import (
    WeightedMapCensus,
    classify,
    cone_cost,
    conway_name,
    corner_cost,
    cost,
    enumerate_by_chi,
    enumerate_euclidean,
    enumerate_spherical,
    euler_characteristic,
    group_order,
    is_bad,
    is_trivial,
    square_billiard_census,
    weighted_euler,
)
from orbifold.notation import parse, to_string

from _oracles import naive_enumerate


# -- feature prices -------------------------------------------------------


def test_feature_prices_are_exact_fractions():
    assert cone_cost(2) == Fraction(1, 2)
    assert cone_cost(7) == Fraction(6, 7)
    assert corner_cost(2) == Fraction(1, 4)
    assert corner_cost(4) == Fraction(3, 8)
    assert cost(parse("o")) == 2
    assert cost(parse("x")) == 1
    assert cost(parse("*")) == 1
    assert cost(parse("o*2x")) == Fraction(2 + 1 + 1) + Fraction(1, 4)
    assert isinstance(euler_characteristic(parse("*237")), Fraction)


SPOT_CHI = [
    ("", Fraction(2)),
    ("o", Fraction(0)),
    ("oo", Fraction(-2)),
    ("22", Fraction(1)),
    ("532", Fraction(1, 30)),
    ("*532", Fraction(1, 60)),
    ("*237", Fraction(-1, 84)),
    ("237", Fraction(-1, 42)),
    ("*(12)3", Fraction(5, 24)),
    ("2*22", Fraction(0)),
    ("*2222", Fraction(0)),
]


def test_spot_euler_characteristics():
    for text, chi in SPOT_CHI:
        assert euler_characteristic(parse(text)) == chi, text


def test_all_plane_signatures_have_chi_zero():
    for sig in enumerate_euclidean():
        assert euler_characteristic(sig) == 0


def test_group_orders():
    assert group_order(parse("*532")) == 120
    assert group_order(parse("532")) == 60
    assert group_order(parse("*432")) == 48
    assert group_order(parse("432")) == 24
    assert group_order(parse("22")) == 2
    assert group_order(parse("x")) == 2
    assert group_order(parse("*")) == 2
    assert group_order(parse("")) == 1
    with pytest.raises(ValueError):
        group_order(parse("o"))  # chi == 0
    with pytest.raises(ValueError):
        group_order(parse("5"))  # bad, despite chi > 0


def test_every_good_spherical_order_is_a_whole_number():
    for sig in enumerate_spherical(8):
        chi = euler_characteristic(sig)
        assert chi > 0
        assert (2 / chi).denominator == 1
        assert group_order(sig) == 2 / chi


# -- bad families -----------------------------------------------------------


BAD = ["5", "2", "32", "(12)2", "*5", "*2", "*32", "*(12)3"]
NOT_BAD = ["", "55", "22", "*55", "*22", "o5", "5x", "5*", "2*3", "*5*", "532"]


def test_bad_families():
    for text in BAD:
        assert is_bad(parse(text)), text
        assert classify(parse(text)).kind == "bad", text
    for text in NOT_BAD:
        assert not is_bad(parse(text)), text


def test_trivial_signature():
    assert is_trivial(parse(""))
    assert not is_trivial(parse("o"))
    assert classify(parse("")).kind == "spherical"
    assert classify(parse("")).order == 1


def test_classify_kinds():
    assert classify(parse("*532")) == classify(parse("*532"))
    assert classify(parse("*532")).kind == "spherical"
    assert classify(parse("*532")).order == 120
    assert classify(parse("4*2")).kind == "euclidean"
    assert classify(parse("4*2")).order is None
    assert classify(parse("*237")).kind == "hyperbolic"
    assert str(classify(parse("*532"))) == "spherical order=120"


# -- the 17 plane types: enumeration and names ------------------------------


PLANE_NAMES = {
    "o": "monotropic",
    "**": "monoscopic",
    "*x": "monorhombic",
    "xx": "monoglide",
    "2222": "ditropic",
    "*2222": "discopic",
    "22*": "digyro",
    "22x": "diglide",
    "2*22": "dirhombic",
    "333": "tritropic",
    "*333": "triscopic",
    "3*3": "trigyro",
    "442": "tetratropic",
    "*442": "tetrascopic",
    "4*2": "tetragyro",
    "632": "hexatropic",
    "*632": "hexascopic",
}


def test_enumerate_euclidean_is_the_17():
    start = time.perf_counter()
    found = enumerate_euclidean()
    elapsed = time.perf_counter() - start
    assert {to_string(s) for s in found} == set(PLANE_NAMES)
    assert len(found) == 17
    assert elapsed < 1.0


def test_plane_names():
    for text, full in PLANE_NAMES.items():
        name = conway_name(parse(text))
        assert name is not None, text
        assert name.full == full
        assert str(name) == full
    assert conway_name(parse("*532")) is None
    assert conway_name(parse("*237")) is None


def test_name_parts():
    name = conway_name(parse("4*2"))
    assert (name.prefix, name.descriptor) == ("tetra", "gyro")
    name = conway_name(parse("22x"))
    assert (name.prefix, name.descriptor) == ("di", "glide")


# -- weighted censuses -------------------------------------------------------


def test_square_billiard_census_is_flat():
    census = square_billiard_census()
    assert weighted_euler(census) == 0
    assert weighted_euler(census) == euler_characteristic(parse("*2222"))


def test_weighted_euler_on_a_plain_polyhedral_map():
    cube = WeightedMapCensus(
        vertices=((8, Fraction(1)),),
        edges=((12, Fraction(1)),),
        faces=((6, Fraction(1)),),
    )
    assert weighted_euler(cube) == 2


def test_weighted_euler_mixed_weights():
    census = WeightedMapCensus(
        vertices=((2, Fraction(1, 6)), (1, Fraction(1))),
        edges=((3, Fraction(1, 2)),),
        faces=((1, Fraction(1, 3)),),
    )
    assert weighted_euler(census) == Fraction(1, 3) + 1 - Fraction(3, 2) + Fraction(1, 3)


# -- enumeration against the brute-force oracle ------------------------------


SPHERICAL_5 = [
    "", "*", "*22", "*222", "*322", "*33", "*332", "*422", "*432", "*44",
    "*522", "*532", "*55", "2*", "2*2", "2*3", "2*4", "2*5", "22", "222",
    "2x", "3*", "3*2", "322", "33", "332", "3x", "4*", "422", "432", "44",
    "4x", "5*", "522", "532", "55", "5x", "x",
]


def test_spherical_enumeration_matches_oracle():
    # Cost below 2 forbids handles, allows at most one cross-cap or mirror
    # boundary, at most three cones (each >= 1/2), at most seven corners
    # (each >= 1/4); those caps make the brute force complete.
    for max_order in (2, 3, 5):
        expected = naive_enumerate(
            Fraction(0),
            Fraction(2),
            max_order,
            hi_strict=True,
            max_handles=0,
            max_crosscaps=1,
            max_rings=1,
            max_cones=3,
            max_corners_per_ring=7,
        )
        found = {to_string(s) for s in enumerate_spherical(max_order)}
        assert found == expected, max_order
    assert sorted(found) == SPHERICAL_5
    assert len(found) == 38


HYPERBOLIC_WINDOW = [
    "*2*", "*22222", "*2x", "*3*", "*32222", "*3232", "*3322", "*3332",
    "*3333", "*3x", "2*222", "2*322", "2*33", "22*2", "22*3", "3*22",
    "3*32", "3*33", "32*", "3222", "32x", "33*", "3322", "33x",
]


def test_chi_window_enumeration_matches_oracle():
    # chi in [-1/3, -1/6] means cost in [13/6, 7/3]; cost <= 7/3 forbids
    # two handles, three cross-caps, three rings, five cones, and six
    # corners on one ring, so these caps are complete.
    expected = naive_enumerate(
        Fraction(13, 6),
        Fraction(7, 3),
        3,
        hi_strict=False,
        max_handles=1,
        max_crosscaps=2,
        max_rings=2,
        max_cones=4,
        max_corners_per_ring=5,
    )
    found = enumerate_by_chi(Fraction(-1, 3), Fraction(-1, 6), 3)
    strings = {to_string(s) for s in found}
    assert strings == expected
    assert sorted(strings) == HYPERBOLIC_WINDOW
    for sig in found:
        assert classify(sig).kind == "hyperbolic"
        chi = euler_characteristic(sig)
        assert Fraction(-1, 3) <= chi <= Fraction(-1, 6)


def test_mixed_sign_window_matches_oracle():
    # chi in [0, 2] at order cap 2: cost in [0, 2]; same cap reasoning.
    expected = naive_enumerate(
        Fraction(0),
        Fraction(2),
        2,
        hi_strict=False,
        max_handles=1,
        max_crosscaps=2,
        max_rings=2,
        max_cones=4,
        max_corners_per_ring=4,
    )
    found = enumerate_by_chi(0, 2, 2)
    assert {to_string(s) for s in found} == expected
    for sig in found:
        assert classify(sig).kind in {"spherical", "euclidean"}


def test_two_enumeration_routes_agree_on_the_plane_types():
    # Exact-cost search and windowed search are independent code paths.
    assert enumerate_by_chi(0, 0, 6) == enumerate_euclidean()


def test_membership_spot_checks():
    window = enumerate_by_chi(Fraction(-1, 84), Fraction(-1, 84), 7)
    assert parse("*237") in window
    for sig in window:
        assert euler_characteristic(sig) == Fraction(-1, 84)
    assert parse("237") in enumerate_by_chi(Fraction(-1, 42), Fraction(-1, 42), 7)


def test_enumeration_rejects_nonsense():
    with pytest.raises(ValueError):
        enumerate_spherical(1)
    with pytest.raises(ValueError):
        enumerate_spherical("5")  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        enumerate_by_chi(1, 0, 3)
    with pytest.raises(ValueError):
        enumerate_by_chi(0, 1, 1)


def test_enumerations_return_canonical_good_signatures():
    for sig in enumerate_spherical(5):
        assert sig.is_canonical
        assert not is_bad(sig)
    for sig in enumerate_by_chi(Fraction(-1, 2), Fraction(-1, 6), 4):
        assert sig.is_canonical
        assert not is_bad(sig)
        assert classify(sig).kind == "hyperbolic"
