import itertools
import math

import pytest
from hypothesis import given, strategies as st

from dihedral_linking import diagram_from_braid, diagram_from_lists
from dihedral_linking.coloring import (
    Coloring,
    affine_orbit,
    all_fox_colorings,
    canonical,
    equivalence_classes,
    fox_colorings,
    is_colorable,
    is_surjective,
    make_coloring,
    reflect,
    satisfies_fox,
)
from dihedral_linking.errors import InvalidColoring, UnsupportedP

from conftest import K816_COLORING5, K816_COLORING7, load_knots


def brute_force_colorings(d, p):
    """Every Fox coloring by exhaustive search (c(0) fixed to 0, then translated)."""
    n = d.n
    base = []
    for rest in itertools.product(range(p), repeat=n - 1):
        colors = (0,) + rest
        if all((colors[i] + colors[(i + 1) % n] - 2 * colors[d.over[i]]) % p == 0
               for i in range(n)):
            base.append(colors)
    return {tuple((c + t) % p for c in colors) for colors in base for t in range(p)}


@given(st.sampled_from([3, 5, 7, 9, 15]), st.data())
def test_reflect_involution(p, data):
    x = data.draw(st.integers(0, p - 1))
    m = data.draw(st.integers(0, p - 1))
    assert reflect(reflect(x, m, p), m, p) == x
    assert reflect(m, m, p) == m


def test_reflect_example():
    assert reflect(1, 0, 5) == 4


@pytest.mark.parametrize("braid,p", [
    ("1 -2 1 -2", 5),
    ("1 1 1", 3),
    ("1 1 1", 9),
    ("1 1 1 2 2 2", 9),
    ("1 1 1 2 2 2", 3),
    ("1 1 1 2 -1 2", 7),
    ("1 1 1 1 1", 5),
    ("1 1 1 1 1", 15),
])
def test_matches_brute_force(braid, p):
    d = diagram_from_braid(braid)
    assert set(all_fox_colorings(d, p)) == brute_force_colorings(d, p)
    expected = sorted(c for c in brute_force_colorings(d, p) if is_surjective(c, p))
    assert [c.colors for c in fox_colorings(d, p)] == expected


def test_816_contains_reference_colorings(k816):
    assert Coloring(5, tuple(K816_COLORING5)) in fox_colorings(k816, 5)
    assert Coloring(7, tuple(K816_COLORING7)) in fox_colorings(k816, 7)


def test_816_single_class(k816):
    for p, ref in [(5, K816_COLORING5), (7, K816_COLORING7)]:
        cls = equivalence_classes(fox_colorings(k816, p))
        assert len(cls) == 1
        assert cls[0] == canonical(Coloring(p, tuple(ref)))


def test_unknot_has_no_colorings():
    d = diagram_from_braid("1")
    assert d.n == 2
    for p in (3, 5, 7, 9):
        assert fox_colorings(d, p) == []
        assert len(all_fox_colorings(d, p)) == p


def test_is_colorable():
    trefoil = diagram_from_braid("1 1 1")
    fig8 = diagram_from_braid("1 -2 1 -2")
    assert is_colorable(trefoil, 3)
    assert not is_colorable(trefoil, 5)
    assert is_colorable(fig8, 5)


def test_unsupported_p():
    d = diagram_from_braid("1 1 1")
    for p in (1, 2, 4, 0, -3):
        with pytest.raises(UnsupportedP):
            fox_colorings(d, p)


def test_affine_orbit_collapses():
    c = Coloring(5, tuple(K816_COLORING5))
    orbit = affine_orbit(c)
    brute = {tuple((a * x + b) % 5 for x in c.colors) for a in range(1, 5) for b in range(5)}
    assert orbit == brute
    reps = equivalence_classes(Coloring(5, o) for o in orbit)
    assert reps == [Coloring(5, min(brute))]


def test_composite_surjectivity():
    # colors in 3Z_9 land in a proper dihedral subgroup
    assert not is_surjective((0, 3, 6, 3), 9)
    assert is_surjective((0, 1, 2), 9)
    assert not is_surjective((4, 4, 4), 7)


def test_count_is_power_of_p_for_prime_p():
    knots = load_knots()
    for name in ["3_1", "4_1", "5_2", "6_1", "7_4", "8_18", "9_35", "9_46", "10_67"]:
        d = diagram_from_braid(knots[name]["braid"])
        for p in (3, 5, 7):
            count = len(all_fox_colorings(d, p))
            k = round(math.log(count, p))
            assert p ** k == count and k >= 1


def test_colorability_matches_determinant():
    for name, row in list(load_knots().items())[:150]:
        d = diagram_from_braid(row["braid"])
        det = int(row["determinant"])
        for p in (3, 5, 7):
            assert is_colorable(d, p) == (det % p == 0), (name, p)


def test_make_coloring_validation(k816):
    assert make_coloring(k816, K816_COLORING5, 5).q == 2
    with pytest.raises(InvalidColoring):
        make_coloring(k816, [0] * 8, 5)
    with pytest.raises(InvalidColoring):
        make_coloring(k816, [1] + K816_COLORING5[1:], 5)
    with pytest.raises(InvalidColoring):
        make_coloring(k816, K816_COLORING5[:4], 5)
    with pytest.raises(InvalidColoring):
        make_coloring(k816, [7] + K816_COLORING5[1:], 5)


def test_affine_action_preserves_fox(k816):
    c = Coloring(7, tuple(K816_COLORING7))
    for colors in affine_orbit(c):
        assert satisfies_fox(k816, colors, 7)
