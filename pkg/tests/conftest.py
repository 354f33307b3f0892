import csv
import random
from pathlib import Path

import pytest

from dihedral_linking import diagram_from_braid, diagram_from_lists, make_coloring
from dihedral_linking.coloring import equivalence_classes, fox_colorings
from dihedral_linking.errors import NotAKnot
from dihedral_linking.knot import BraidWord

DATA = Path(__file__).parent / "data"

# Small diagrams with fixed arc numbering and colorings.
FIG8_OVER = [2, 3, 0, 1]
FIG8_SIGN = [-1, 1, -1, 1]
FIG8_COLORS = [0, 2, 1, 4]

TREFOIL_OVER = [2, 0, 1, 3]
TREFOIL_SIGN = [1, 1, 1, 1]
TREFOIL_COLORS = [0, 1, 2, 0]

K816_OVER = [6, 4, 0, 7, 2, 3, 1, 5]
K816_SIGN = [1, 1, 1, -1, 1, -1, 1, -1]
K816_COLORING5 = [2, 3, 2, 2, 0, 4, 0, 1]
K816_COLORING7 = [3, 4, 5, 1, 1, 2, 0, 1]


@pytest.fixture
def fig8():
    d = diagram_from_lists(FIG8_OVER, FIG8_SIGN)
    return d, make_coloring(d, FIG8_COLORS, 5)


@pytest.fixture
def trefoil():
    d = diagram_from_lists(TREFOIL_OVER, TREFOIL_SIGN)
    return d, make_coloring(d, TREFOIL_COLORS, 3)


@pytest.fixture
def k816():
    return diagram_from_lists(K816_OVER, K816_SIGN)


def load_knots():
    with open(DATA / "knots.csv", newline="") as fh:
        return {row["name"]: row for row in csv.DictReader(fh)}


def load_expected_tables():
    out = {}
    with open(DATA / "expected_tables.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            out.setdefault(int(row["p"]), {})[row["name"]] = row["values"]
    return out


def random_knot_braid(rng, max_letters=12, max_strands=5):
    """Random braid word (as text) whose closure is a knot."""
    while True:
        strands = rng.randint(2, max_strands)
        length = rng.randint(1, max_letters)
        letters = [rng.choice([-1, 1]) * rng.randint(1, strands - 1) for _ in range(length)]
        try:
            word = BraidWord(tuple(letters), strands)
        except ValueError:
            continue
        if word.closure_components() == 1 and max(abs(g) for g in letters) == strands - 1:
            return " ".join(map(str, letters))


def random_colored_instances(count, seed=20240611, max_letters=12):
    """``count`` (braid, diagram, coloring) triples with p in {3, 5, 7}, all surjective."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        text = random_knot_braid(rng, max_letters=max_letters)
        try:
            d = diagram_from_braid(text)
        except NotAKnot:
            continue
        if d.n > max_letters:
            continue
        p = rng.choice([3, 5, 7])
        cols = fox_colorings(d, p)
        if not cols:
            continue
        out.append((text, d, rng.choice(cols)))
    return out


def classes(d, p):
    return equivalence_classes(fox_colorings(d, p))
