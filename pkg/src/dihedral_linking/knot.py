"""Braid words and their closures as oriented knot diagrams.

An :class:`OrientedDiagram` is the purely combinatorial data the rest of the
package consumes: for each crossing ``i`` the index ``over[i]`` of the arc
passing over it and its local writhe ``sign[i]``. Arcs are numbered in
traversal order and crossing ``i`` sits at the head of arc ``i``, where arc
``i`` passes under and arc ``i + 1`` (mod n) begins.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import BraidError, EmptyWord, LengthMismatch, NotAKnot, OddLength, RangeError, ZeroLetter

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        if not self.letters:
            raise EmptyWord("braid word has no letters")
        for g in self.letters:
            if g == 0:
                raise ZeroLetter("braid letters must be nonzero")
            if abs(g) > self.strands - 1:
                raise RangeError(f"letter {g} needs more than {self.strands} strands")

    def __len__(self):
        return len(self.letters)

    def permutation(self) -> list[int]:
        """Bottom position (0-based) reached by the strand starting at each top position."""
        perm = []
        for start in range(self.strands):
            pos = start
            for g in self.letters:
                a = abs(g) - 1
                if pos == a:
                    pos = a + 1
                elif pos == a + 1:
                    pos = a
            perm.append(pos)
        return perm

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for s in range(self.strands):
            if not seen[s]:
                count += 1
                while not seen[s]:
                    seen[s] = True
                    s = perm[s]
        return count

    def __str__(self):
        return " ".join(str(g) for g in self.letters)


@dataclass(frozen=True)
class OrientedDiagram:
    over: tuple[int, ...]
    sign: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.over)

    def mirror(self) -> OrientedDiagram:
        """Diagram of the mirror image: same Gauss structure, all writhes negated."""
        return OrientedDiagram(self.over, tuple(-s for s in self.sign))

    def rotate(self, shift: int) -> OrientedDiagram:
        """Relabel arcs so that old arc ``shift`` becomes arc 0."""
        n = self.n
        over = tuple((self.over[(i + shift) % n] - shift) % n for i in range(n))
        sign = tuple(self.sign[(i + shift) % n] for i in range(n))
        return OrientedDiagram(over, sign)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"1 -2 1 -2"`` (commas and surrounding brackets allowed)."""
    body = text.strip().strip("[](){}")
    tokens = [t for t in _SEPARATORS.split(body) if t]
    if not tokens:
        raise EmptyWord("empty braid word")
    try:
        letters = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise BraidError(f"not an integer braid letter: {exc}") from None
    if any(g == 0 for g in letters):
        raise ZeroLetter("braid letters must be nonzero")
    word = BraidWord(letters, max(abs(g) for g in letters) + 1)
    if word.closure_components() != 1:
        raise NotAKnot(f"closure of {word} has {word.closure_components()} components")
    return word


def ensure_even(word: BraidWord) -> BraidWord:
    """Append a positive Markov stabilization when the word has odd length."""
    if len(word) % 2 == 0:
        return word
    return BraidWord(word.letters + (word.strands,), word.strands + 1)


def braid_closure(word: BraidWord) -> OrientedDiagram:
    """Oriented diagram of the closure of ``word``.

    Strands run downward through the braid. Traversal starts at the top of
    strand position 1. A positive letter is a positive crossing, which for
    downward strands means the strand moving from position g+1 to g is over.
    """
    n = len(word)
    if n % 2:
        raise OddLength(f"braid word has {n} letters; call ensure_even first")
    if word.closure_components() != 1:
        raise NotAKnot(f"closure of {word} is not a knot")

    # events: (letter index, passes over?) in traversal order
    events = []
    pos = 0
    while True:
        for idx, g in enumerate(word.letters):
            a = abs(g) - 1
            if pos == a:
                # moving left to right: over only for negative letters
                events.append((idx, g < 0))
                pos = a + 1
            elif pos == a + 1:
                events.append((idx, g > 0))
                pos = a
        if pos == 0:
            break
    assert len(events) == 2 * n

    crossing_of_letter = {}
    over_arc_of_letter = {}
    arc = 0
    for idx, is_over in events:
        if is_over:
            over_arc_of_letter[idx] = arc
        else:
            crossing_of_letter[idx] = arc
            arc += 1
    assert arc == n

    over = [0] * n
    sign = [0] * n
    for idx, g in enumerate(word.letters):
        i = crossing_of_letter[idx]
        # the arc index counter runs past n-1 only on the final wrap to arc 0
        over[i] = over_arc_of_letter[idx] % n
        sign[i] = 1 if g > 0 else -1
    return OrientedDiagram(tuple(over), tuple(sign))


def diagram_from_lists(over: Sequence[int], sign: Sequence[int]) -> OrientedDiagram:
    over = tuple(int(v) for v in over)
    sign = tuple(int(s) for s in sign)
    if len(over) != len(sign):
        raise LengthMismatch(f"{len(over)} overstrands but {len(sign)} signs")
    n = len(over)
    if n == 0 or n % 2:
        raise OddLength(f"diagram needs a positive even crossing count, got {n}")
    if any(not 0 <= v < n for v in over):
        raise RangeError(f"overstrand indices must lie in 0..{n - 1}")
    if any(s not in (1, -1) for s in sign):
        raise RangeError("signs must be +1 or -1")
    return OrientedDiagram(over, sign)


def diagram_from_braid(text: str, mirror: bool = False) -> OrientedDiagram:
    d = braid_closure(ensure_even(parse_braid(text)))
    return d.mirror() if mirror else d
