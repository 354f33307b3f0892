"""Rational 2-chains bounding the branch curves.

The chain bounding component ``k`` is encoded by unknowns ``x[i][j]``
(arc ``i``, lift ``j = 1..q``). Each crossing and lift gives one linear
equation; the system is solvable over Q exactly when the component is
rationally null-homologous. Row and column ``(i, j)`` both sit at flat index
``i * q + (j - 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cover import ColoredDiagram
from .errors import DimensionMismatch


def flat_index(i: int, j: int, q: int) -> int:
    return i * q + (j - 1)


@dataclass
class LinearSystem:
    k: int
    n: int
    q: int
    matrix: list[list[int]]
    rhs: list[int]

    def augmented_text(self) -> str:
        """Rows ``coefficients | constant``, with the constant moved to the right-hand side."""
        width = max(len(str(v)) for row in self.matrix for v in row + [0])
        width = max(width, max(len(str(v)) for v in self.rhs))
        lines = []
        for i in range(self.n):
            for j in range(1, self.q + 1):
                r = flat_index(i, j, self.q)
                body = " ".join(f"{v:>{width}}" for v in self.matrix[r])
                lines.append(f"a[{i},{j}]  {body} | {self.rhs[r]:>{width}}")
        return "\n".join(lines)


@dataclass
class ChainSolution:
    k: int
    n: int
    q: int
    solvable: bool
    x: list[Fraction] | None = None
    nullspace: list[list[Fraction]] = field(default_factory=list)

    def value(self, i: int, j: int) -> Fraction:
        return self.x[flat_index(i, j, self.q)]

    def shifted(self, vector: Sequence[Fraction]) -> ChainSolution:
        """Same component, particular solution moved by ``vector``."""
        x = [a + Fraction(b) for a, b in zip(self.x, vector)]
        return ChainSolution(self.k, self.n, self.q, True, x, self.nullspace)

    @property
    def status(self) -> str:
        return "Solvable" if self.solvable else "NotNullHomologous"


def coefficient_matrix(cd: ColoredDiagram) -> list[list[int]]:
    """Integer coefficients shared by the systems of every component."""
    cc = cd.coefficients
    d = cd.diagram
    n, q = cc.n, cc.q
    size = n * q
    m = [[0] * size for _ in range(size)]
    for i in range(n):
        o = d.over[i]
        nxt = (i + 1) % n
        for j in range(1, q + 1):
            row = m[flat_index(i, j, q)]
            row[flat_index(i, j, q)] += 1
            row[flat_index(nxt, j, q)] -= 1
            a, b = cc.a[i][j], cc.b[i][j]
            if a:
                row[flat_index(o, a, q)] -= cc.eps_a[i][j]
            if b:
                row[flat_index(o, b, q)] -= cc.eps_b[i][j]
    return m


def constant_vector(cd: ColoredDiagram, k: int) -> list[int]:
    cc = cd.coefficients
    n, q = cc.n, cc.q
    rhs = [0] * (n * q)
    for i in range(n):
        for j in range(1, q + 1):
            rhs[flat_index(i, j, q)] = -(cc.c_a[k][i][j] + cc.c_b[k][i][j])
    return rhs


def assemble(cd: ColoredDiagram, k: int) -> LinearSystem:
    cc = cd.coefficients
    if not 0 <= k <= cc.q:
        raise ValueError(f"component {k} out of range 0..{cc.q}")
    return LinearSystem(k, cc.n, cc.q, coefficient_matrix(cd), constant_vector(cd, k))


def _reduce_row(row, rhs):
    g = 0
    for v in row:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                return row, rhs
    for v in rhs:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                return row, rhs
    if g > 1:
        row = [v // g for v in row]
        rhs = [v // g for v in rhs]
    return row, rhs


def _rref(matrix, rhs_columns):
    """Fraction-free Gauss-Jordan elimination of ``[matrix | rhs_columns...]``.

    Rows stay integral and are divided by their content after every update.
    Returns ``(rows, rhs_rows, pivot_cols)``; pivot row ``r`` has its only
    nonzero pivot-column entry at ``pivot_cols[r]``.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = [list(map(int, r)) for r in matrix]
    rhs = [[int(col[r]) for col in rhs_columns] for r in range(nrows)]
    pivots = []
    prow = 0
    for col in range(ncols):
        piv = next((r for r in range(prow, nrows) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[prow], rows[piv] = rows[piv], rows[prow]
        rhs[prow], rhs[piv] = rhs[piv], rhs[prow]
        pr, ph = rows[prow], rhs[prow]
        pv = pr[col]
        for r in range(nrows):
            f = rows[r][col]
            if r != prow and f != 0:
                g = math.gcd(pv, f)
                a, b = pv // g, f // g
                new_row = [a * x - b * y for x, y in zip(rows[r], pr)]
                new_rhs = [a * x - b * y for x, y in zip(rhs[r], ph)]
                rows[r], rhs[r] = _reduce_row(new_row, new_rhs)
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return rows, rhs, pivots


def _nullspace(rows, pivots, ncols):
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            if rows[r][fc]:
                v[pc] = Fraction(-rows[r][fc], rows[r][pc])
        basis.append(v)
    return basis


def _particular(rows, rhs, col, pivots, ncols, nrows):
    rank = len(pivots)
    if any(rhs[r][col] != 0 for r in range(rank, nrows)):
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = Fraction(rhs[r][col], rows[r][pc])
    return x


def solve(sys: LinearSystem) -> ChainSolution:
    """Exact solve; free variables are set to zero in the particular solution."""
    size = len(sys.matrix)
    rows, rhs, pivots = _rref(sys.matrix, [sys.rhs])
    basis = _nullspace(rows, pivots, size)
    x = _particular(rows, rhs, 0, pivots, size, size)
    return ChainSolution(sys.k, sys.n, sys.q, x is not None, x, basis)


def solve_all(cd: ColoredDiagram) -> list[ChainSolution]:
    """Chain solutions for components 0..q from a single elimination."""
    cc = cd.coefficients
    n, q = cc.n, cc.q
    size = n * q
    m = coefficient_matrix(cd)
    columns = [constant_vector(cd, k) for k in range(q + 1)]
    rows, rhs, pivots = _rref(m, columns)
    basis = _nullspace(rows, pivots, size)
    out = []
    for k in range(q + 1):
        x = _particular(rows, rhs, k, pivots, size, size)
        out.append(ChainSolution(k, n, q, x is not None, x, basis))
    return out


def residual(sys: LinearSystem, x: Sequence) -> list[Fraction]:
    size = len(sys.matrix)
    if len(x) != size:
        raise DimensionMismatch(f"expected {size} unknowns, got {len(x)}")
    return [
        sum((Fraction(a) * Fraction(v) for a, v in zip(row, x)), Fraction(0)) - sys.rhs[r]
        for r, row in enumerate(sys.matrix)
    ]
