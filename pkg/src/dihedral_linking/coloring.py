"""Fox p-colorings of oriented diagrams."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidColoring, UnsupportedP
from .knot import OrientedDiagram


@dataclass(frozen=True)
class Coloring:
    p: int
    colors: tuple[int, ...]

    @property
    def q(self) -> int:
        return (self.p - 1) // 2

    def __str__(self):
        return ",".join(str(c) for c in self.colors)


def check_p(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise UnsupportedP(f"p must be an odd integer >= 3, got {p}")


def reflect(x: int, m: int, p: int) -> int:
    """Image of p-gon vertex ``x`` under the reflection through vertex ``m``."""
    return (2 * m - x) % p


def satisfies_fox(d: OrientedDiagram, colors: Sequence[int], p: int) -> bool:
    n = d.n
    return all(
        (colors[i] + colors[(i + 1) % n] - 2 * colors[d.over[i]]) % p == 0 for i in range(n)
    )


def is_surjective(colors: Sequence[int], p: int) -> bool:
    """Whether the coloring maps onto all of D_p (nontrivial, not in a proper dihedral subgroup)."""
    g = 0
    for c in colors:
        g = math.gcd(g, c - colors[0])
    return math.gcd(p, g) == 1


def make_coloring(d: OrientedDiagram, colors: Sequence[int], p: int) -> Coloring:
    """Validate a user-supplied coloring against ``d``."""
    check_p(p)
    colors = tuple(int(c) for c in colors)
    if len(colors) != d.n:
        raise InvalidColoring(f"coloring has {len(colors)} entries, diagram has {d.n} arcs")
    if any(not 0 <= c < p for c in colors):
        raise InvalidColoring(f"colors must lie in 0..{p - 1}")
    if not satisfies_fox(d, colors, p):
        raise InvalidColoring("coloring violates the Fox condition")
    if not is_surjective(colors, p):
        raise InvalidColoring("coloring is trivial or not surjective onto D_p")
    return Coloring(p, colors)


def _fox_matrix(d: OrientedDiagram, p: int) -> list[list[int]]:
    n = d.n
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] += 1
        row[(i + 1) % n] += 1
        row[d.over[i]] -= 2
        rows.append([v % p for v in row])
    return rows


def solve_homogeneous_mod(rows: list[list[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    """All solutions of ``rows @ x == 0 (mod p)``.

    Eliminates with unit pivots only, which is plain Gaussian elimination when
    p is prime. Columns never pivoted are enumerated over Z_p and filtered by
    the leftover (non-unit) rows, so the cost is p ** (free columns).
    """
    m = [list(r) for r in rows]
    pivots: list[tuple[int, int]] = []  # (row, col)
    used_rows: set[int] = set()
    for col in range(ncols):
        piv = None
        for r in range(len(m)):
            if r not in used_rows and math.gcd(m[r][col], p) == 1:
                piv = r
                break
        if piv is None:
            continue
        inv = pow(m[piv][col], -1, p)
        m[piv] = [(v * inv) % p for v in m[piv]]
        for r in range(len(m)):
            if r != piv and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[piv])]
        used_rows.add(piv)
        pivots.append((piv, col))

    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    leftover = [m[r] for r in range(len(m)) if r not in used_rows and any(m[r])]

    solutions = []
    for values in itertools.product(range(p), repeat=len(free)):
        x = [0] * ncols
        for c, v in zip(free, values):
            x[c] = v
        # pivot rows are reduced: x[pc] = -sum over free columns
        for r, pc in pivots:
            x[pc] = -sum(m[r][c] * x[c] for c in free) % p
        if all(sum(a * b for a, b in zip(row, x)) % p == 0 for row in leftover):
            solutions.append(tuple(x))
    return solutions


def all_fox_colorings(d: OrientedDiagram, p: int) -> list[tuple[int, ...]]:
    """Every solution of the Fox system, trivial ones included."""
    check_p(p)
    return solve_homogeneous_mod(_fox_matrix(d, p), d.n, p)


def fox_colorings(d: OrientedDiagram, p: int) -> list[Coloring]:
    """Nontrivial colorings of ``d`` that surject onto D_p, sorted lexicographically."""
    found = []
    for colors in sorted(all_fox_colorings(d, p)):
        if is_surjective(colors, p):
            assert satisfies_fox(d, colors, p)
            found.append(Coloring(p, colors))
    return found


def affine_orbit(c: Coloring) -> set[tuple[int, ...]]:
    p = c.p
    orbit = set()
    for a in range(1, p):
        if math.gcd(a, p) != 1:
            continue
        for b in range(p):
            orbit.add(tuple((a * x + b) % p for x in c.colors))
    return orbit


def canonical(c: Coloring) -> Coloring:
    """Lexicographically smallest member of the affine orbit of ``c``."""
    return Coloring(c.p, min(affine_orbit(c)))


def equivalence_classes(colorings: Iterable[Coloring]) -> list[Coloring]:
    """One canonical representative per affine orbit, sorted."""
    reps = {canonical(c) for c in colorings}
    return sorted(reps, key=lambda c: c.colors)


def is_colorable(d: OrientedDiagram, p: int) -> bool:
    return bool(fox_colorings(d, p))


def parse_coloring(text: str) -> tuple[int, ...]:
    body = text.strip().strip("[]()")
    try:
        return tuple(int(t) for t in body.replace(",", " ").split())
    except ValueError as exc:
        raise InvalidColoring(f"malformed coloring {text!r}: {exc}") from None
