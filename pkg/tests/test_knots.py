"""Closed-curve crossing codes: planarity, diagrams, colorings."""

import itertools
import random
import time

import pytest

from orbifold.knots import (
    CatalogEntry,
    FaceColoring,
    GaussCode,
    KnotDiagram,
    KnotError,
    all_diagrams,
    alternating_diagrams,
    arc_count,
    catalog,
    checkerboard,
    descending_diagram,
    faces,
    mirror,
    parse_code,
    parse_diagram,
    planar_signing,
    relabel,
    reverse,
    tricolor_count,
    tricolor_count_bruteforce,
    validate,
)

TREFOIL = "1+ 2+ 3+ 1+ 2+ 3+"


# -- code generation helpers (independent of the library) --------------------


def _all_words(n: int):
    """Every double-occurrence word on 1..n, labels in first-visit order."""
    positions = list(range(2 * n))

    def pair_up(remaining):
        if not remaining:
            yield []
            return
        first = remaining[0]
        for k in range(1, len(remaining)):
            second = remaining[k]
            rest = [p for p in remaining[1:] if p != second]
            for tail in pair_up(rest):
                yield [(first, second)] + tail

    for pairing in pair_up(positions):
        word = [0] * (2 * n)
        for lab, (i, j) in enumerate(pairing, start=1):
            word[i] = lab
            word[j] = lab
        yield tuple(word)


def _valid_codes(n: int):
    out = []
    for word in _all_words(n):
        for signs in itertools.product((1, -1), repeat=n):
            sign_seq = tuple(signs[lab - 1] for lab in word)
            code = GaussCode(word, sign_seq)
            try:
                validate(code)
            except KnotError:
                continue
            out.append(code)
    return out


def _proper_two_colorings(code: GaussCode):
    """Brute force: all proper black/white colorings of the faces."""
    fs = faces(code)
    m = 2 * code.n

    def face_of(dart):
        for idx, f in enumerate(fs):
            if dart in f:
                return idx
        raise AssertionError(f"dart {dart} in no face")

    adjacent = [(face_of((e, 0)), face_of((e, 1))) for e in range(m)]
    good = []
    for bits in itertools.product((0, 1), repeat=len(fs)):
        if all(bits[a] != bits[b] for a, b in adjacent):
            good.append(bits)
    return fs, good


# -- pinned examples ----------------------------------------------------------


def test_pinned_trefoil_is_planar_with_five_faces():
    code = parse_code(TREFOIL)
    assert validate(code) == 5
    assert sorted(len(f) for f in faces(code)) == [2, 2, 2, 3, 3]


def test_pinned_one_crossing_loop():
    code = parse_code("1+ 1+")
    assert validate(code) == 3


def test_pinned_nonplanar_square_word_is_rejected():
    code = parse_code("1+ 2+ 1+ 2+")
    with pytest.raises(KnotError, match="not planar"):
        validate(code)
    assert len(faces(code)) == 2


def test_empty_code_is_the_plain_loop():
    code = parse_code("")
    assert code.n == 0
    assert validate(code) == 2
    assert tricolor_count(descending_diagram(code)) == 3


def test_five_crossing_code_has_32_diagrams():
    entry = next(e for e in catalog() if e.name == "5-2")
    diagrams = all_diagrams(entry.code)
    assert len(diagrams) == 32
    keys = {d.over_first for d in diagrams}
    assert len(keys) == 32
    assert diagrams[0].over_first == (True,) * 5  # descending comes first
    assert diagrams[0] == descending_diagram(entry.code)


# -- exhaustive battery at small sizes ----------------------------------------


def test_exhaustive_small_codes():
    start = time.perf_counter()
    for n in (1, 2, 3, 4):
        valid = _valid_codes(n)
        assert valid, n
        for code in valid:
            f = len(faces(code))
            assert f == code.n + 2  # V - E + F = n - 2n + (n+2) = 2

            # flipping every crossing is a reflection: still planar
            flipped = GaussCode(code.labels, tuple(-s for s in code.signs))
            assert validate(flipped) == f

            # exactly two alternating assignments, complementary, alternating
            alt1, alt2 = alternating_diagrams(code)
            assert alt1.over_first == tuple(not b for b in alt2.over_first)
            for diagram in (alt1, alt2):
                occ = code.occurrences()
                seen = []
                for pos, lab in enumerate(code.labels):
                    over = diagram.over_first[lab - 1] == (occ[lab][0] == pos)
                    seen.append(over)
                assert all(a != b for a, b in zip(seen, seen[1:]))

            # checkerboard: the two proper colorings, found independently
            fs, proper = _proper_two_colorings(code)
            assert len(proper) == 2
            black, white = checkerboard(code)
            assert black.faces == fs and white.faces == fs
            got = {
                tuple(0 if c == "black" else 1 for c in coloring.colors)
                for coloring in (black, white)
            }
            assert got == set(proper)

            # counting: unknot-like diagrams give exactly 3
            assert tricolor_count(descending_diagram(code)) == 3

            # algebraic and brute-force counts agree on every diagram
            for diagram in all_diagrams(code):
                algebra = tricolor_count(diagram)
                brute = tricolor_count_bruteforce(diagram)
                assert algebra == brute
                assert algebra >= 3 and algebra % 3 == 0
    assert time.perf_counter() - start < 20.0


def test_tiny_codes_are_all_trivially_colored():
    for n in (0, 1, 2):
        for code in _valid_codes(n) if n else [GaussCode((), ())]:
            for diagram in all_diagrams(code):
                assert tricolor_count(diagram) == 3


def test_random_codes_battery():
    rng = random.Random(20260819)
    start = time.perf_counter()
    for n in (5, 6):
        collected = 0
        attempts = 0
        while collected < 15 and attempts < 4000:
            attempts += 1
            word = list(range(1, n + 1)) * 2
            rng.shuffle(word)
            # relabel by first appearance
            order = {}
            for lab in word:
                order.setdefault(lab, len(order) + 1)
            word = tuple(order[lab] for lab in word)
            signs = tuple(rng.choice((1, -1)) for _ in range(n))
            code = GaussCode(word, tuple(signs[lab - 1] for lab in word))
            try:
                validate(code)
            except KnotError:
                continue
            collected += 1

            alt1, alt2 = alternating_diagrams(code)
            assert alt1.over_first == tuple(not b for b in alt2.over_first)
            fs, proper = _proper_two_colorings(code)
            assert len(proper) == 2
            assert tricolor_count(descending_diagram(code)) == 3

            sample = [alt1, alt2, descending_diagram(code)]
            sample += all_diagrams(code)[:5]
            for diagram in sample:
                assert tricolor_count(diagram) == tricolor_count_bruteforce(diagram)

            # structural invariances
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            mapping = {old: new for old, new in zip(range(1, n + 1), perm)}
            relabeled = relabel(code, mapping)
            assert validate(relabeled) == n + 2
            assert tricolor_count(alternating_diagrams(relabeled)[0]) in {
                tricolor_count(alt1),
                tricolor_count(alt2),
            }
            rev = reverse(code)
            assert validate(rev) == n + 2
            assert reverse(rev) == code
        assert collected >= 5, f"too few valid random codes at n={n}"
    assert time.perf_counter() - start < 20.0


# -- invariances ---------------------------------------------------------------


def test_mirror_swaps_over_and_under():
    code = parse_code(TREFOIL)
    for diagram in all_diagrams(code):
        m = mirror(diagram)
        assert m.over_first == tuple(not b for b in diagram.over_first)
        assert mirror(m) == diagram
        assert tricolor_count(m) == tricolor_count(diagram)


def test_reverse_keeps_the_count():
    for entry in catalog():
        rev = reverse(entry.code)
        assert validate(rev) == entry.crossings + 2
        a, b = alternating_diagrams(entry.code)
        ra, rb = alternating_diagrams(rev)
        assert {tricolor_count(ra), tricolor_count(rb)} == {
            tricolor_count(a),
            tricolor_count(b),
        }


def test_relabel_rejects_non_bijections():
    code = parse_code(TREFOIL)
    with pytest.raises(KnotError):
        relabel(code, {1: 1, 2: 1, 3: 2})
    with pytest.raises(KnotError):
        relabel(code, {1: 1, 2: 2})
    swapped = relabel(code, {1: 2, 2: 1, 3: 3})
    assert validate(swapped) == 5


# -- the catalog ----------------------------------------------------------------


EXPECTED_COUNTS = {
    "3-1": 9,
    "4-1": 3,
    "5-1": 3,
    "5-2": 3,
    "6-1": 9,
    "6-2": 3,
    "6-3": 3,
}


def test_catalog_entries_are_planar_and_sized():
    entries = catalog()
    assert [e.name for e in entries] == sorted(EXPECTED_COUNTS)
    for entry in entries:
        assert isinstance(entry, CatalogEntry)
        assert entry.code.n == entry.crossings
        assert validate(entry.code) == entry.crossings + 2
        assert int(entry.name.split("-")[0]) == entry.crossings


def test_catalog_tricolor_counts():
    for entry in catalog():
        a, b = alternating_diagrams(entry.code)
        ca, cb = tricolor_count(a), tricolor_count(b)
        assert ca == cb == EXPECTED_COUNTS[entry.name], entry.name
        assert tricolor_count_bruteforce(a) == ca
        assert arc_count(a) == entry.crossings


def test_catalog_signs_come_from_the_planar_search():
    for entry in catalog():
        word = entry.code.labels
        assert planar_signing(word) == entry.code


def test_planar_signing_prefers_plus():
    assert planar_signing((1, 2, 3, 1, 2, 3)).signs == (1,) * 6
    fig8 = planar_signing((1, 2, 3, 1, 4, 3, 2, 4))
    assert str(fig8) == "1+ 2- 3- 1+ 4+ 3- 2- 4+"
    with pytest.raises(KnotError):
        planar_signing((1, 2, 1, 2))
    with pytest.raises(KnotError):
        planar_signing((1, 2, 2, 1, 1, 2))  # not a double-occurrence word


# -- parsing, formatting, and validation ----------------------------------------


def test_code_round_trips():
    for text in (TREFOIL, "1+ 2- 3- 1+ 4+ 3- 2- 4+", "1- 1-", ""):
        code = parse_code(text)
        assert str(code) == text
        assert parse_code(str(code)) == code


def test_diagram_round_trips():
    d = parse_diagram("1+ 2+ 3+ 1+ 2+ 3+ /O1,U2,O3")
    assert d.over_first == (True, False, True)
    assert str(d) == "1+ 2+ 3+ 1+ 2+ 3+ /O1,U2,O3"
    assert parse_diagram(str(d)) == d
    with pytest.raises(KnotError):
        parse_diagram(TREFOIL)  # the assignment suffix is required here


@pytest.mark.parametrize(
    "bad",
    [
        "1*",
        "x+",
        "+1",
        "1+ 1-",        # the two visits disagree in sign
        "1+",            # single visit
        "1+ 1+ 1+ 1+",  # more than two visits
        "1+ 3+ 1+ 3+",  # label gap: 2 is missing
        "0+ 0+",         # labels start at 1
    ],
)
def test_parse_code_rejects(bad):
    with pytest.raises(KnotError):
        parse_code(bad)


@pytest.mark.parametrize(
    "bad",
    [
        "1+ 1+ /O2",
        "1+ 1+ /Q1",
        "1+ 1+ /O1,U1",
        "1+ 2+ 1+ 2+ /O1",
    ],
)
def test_parse_diagram_rejects(bad):
    with pytest.raises(KnotError):
        parse_diagram(bad)


def test_gauss_code_constructor_validates():
    with pytest.raises(KnotError):
        GaussCode((1, 1), (1, -1))
    with pytest.raises(KnotError):
        GaussCode((1, 2, 1), (1, 1, 1))
    with pytest.raises(KnotError):
        GaussCode((1, 1), (2, 2))
    code = GaussCode((1, 1), (-1, -1))
    assert code.sign_of(1) == -1
    assert code.occurrences() == {1: (0, 1)}


def test_diagram_constructor_validates():
    code = parse_code(TREFOIL)
    with pytest.raises(KnotError):
        KnotDiagram(code, (True, False))
    coerced = KnotDiagram(code, (1, 0, 1))  # type: ignore[arg-type]
    assert coerced.over_first == (True, False, True)
    assert all(isinstance(b, bool) for b in coerced.over_first)


def test_face_coloring_shape():
    black, white = checkerboard(parse_code(TREFOIL))
    assert isinstance(black, FaceColoring)
    assert set(black.colors) == {"black", "white"}
    assert len(black.colors) == len(black.faces) == 5
    assert black.colors != white.colors
