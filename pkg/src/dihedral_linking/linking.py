"""Linking numbers of branch curves and the dihedral linking invariant."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .chains import ChainSolution, solve_all
from .coloring import Coloring
from .cover import ColoredDiagram, CrossingCoefficients
from .errors import NotSolvable, SymmetryViolation
from .knot import OrientedDiagram


@functools.total_ordering
class _Infinity:
    """Unsigned infinity; sorts after every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __neg__(self):
        return self

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("dihedral-linking-inf")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtendedRational = Union[Fraction, _Infinity]


def format_value(v: ExtendedRational) -> str:
    if v is INF:
        return "inf"
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_value(text: str) -> ExtendedRational:
    text = text.strip()
    if text in ("inf", "∞"):
        return INF
    return Fraction(text)


def sort_values(values) -> list:
    return sorted(values, key=lambda v: (v is INF, 0 if v is INF else v))


def int_term(cc: CrossingCoefficients, i: int, j: int, k: int, sol: ChainSolution) -> Fraction:
    """Signed intersection of the pushoff of lift ``j`` near crossing ``i`` with the chain for ``k``."""
    if not sol.solvable:
        raise NotSolvable(f"component {k} is not rationally null-homologous")
    a = cc.a[i][j]
    term = Fraction(0)
    if a:
        term = cc.eps_a[i][j] * sol.value(cc.d.over[i], a)
    return term - cc.c_a[k][i][j]


def lk_sum(cc: CrossingCoefficients, j: int, k: int, sol: ChainSolution) -> Fraction:
    return sum((int_term(cc, i, j, k, sol) for i in range(cc.n)), Fraction(0))


def lk_pair(
    cc: CrossingCoefficients, j: int, k: int, solutions: Mapping[int, ChainSolution]
) -> ExtendedRational:
    """lk(K^j, K^k), or INF if either curve is not rationally null-homologous.

    Off-diagonal values are computed from both chains and compared.
    """
    if not (solutions[j].solvable and solutions[k].solvable):
        return INF
    value = lk_sum(cc, j, k, solutions[k])
    if j != k:
        other = lk_sum(cc, k, j, solutions[j])
        if other != value:
            raise SymmetryViolation(f"lk(K^{j},K^{k}) = {value} but lk(K^{k},K^{j}) = {other}")
    return value


@dataclass
class DLNResult:
    p: int
    matrix: list[list[ExtendedRational]]
    coloring: Coloring | None = None

    @property
    def q(self) -> int:
        return (self.p - 1) // 2

    @property
    def multiset(self) -> list[ExtendedRational]:
        """Off-diagonal entries over unordered pairs, sorted with INF last."""
        m = self.matrix
        size = len(m)
        return sort_values(m[j][k] for j in range(size) for k in range(j + 1, size))

    def text(self) -> str:
        cells = [[format_value(v) for v in row] for row in self.matrix]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def dln_from_solutions(cd: ColoredDiagram, solutions: Sequence[ChainSolution]) -> DLNResult:
    cc = cd.coefficients
    q = cc.q
    sols = {s.k: s for s in solutions}
    matrix = [[lk_pair(cc, j, k, sols) for k in range(q + 1)] for j in range(q + 1)]
    return DLNResult(cd.coloring.p, matrix, cd.coloring)


def dln(
    d: OrientedDiagram,
    col: Coloring,
    initial: Sequence[tuple[int, int]] | None = None,
) -> DLNResult:
    """Linking matrix of the branch curves for one colored diagram.

    Entry ``(j, k)`` is lk(K^j, K^k); the diagonal holds blackboard-framed
    self-linking numbers and is not part of the invariant.
    """
    cd = ColoredDiagram(d, col, None if initial is None else tuple(map(tuple, initial)))
    return dln_from_solutions(cd, solve_all(cd))
