"""Configuration diagrams of the dihedral cover and their crossing coefficients.

For each arc ``i`` and lift index ``j`` the configuration diagram stores an
arrow ``t[i][j] -> h[i][j]`` between vertices of the p-gon, i.e. the sheets
on either side of the lift of the arc. Index 0 is the degenerate arrow at the
arc's own color (the index-1 lift). Everything downstream only needs the
integer tables computed in :class:`CrossingCoefficients`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coloring import Coloring, reflect
from .errors import ClosureFailure
from .knot import OrientedDiagram


CONVENTIONS = ("centered", "sorted")


def initial_configuration(col: Coloring, convention: str = "centered") -> list[tuple[int, int]]:
    """Arc-0 arrows as ``(tail, head)`` pairs, index 0 being the degenerate arrow.

    ``centered``: arrow j runs from ``c(0) - j`` to ``c(0) + j`` (mod p).
    ``sorted``: the reflection pairs ``{m, 2c(0) - m}`` ordered by smaller
    endpoint, tail at the smaller endpoint.
    """
    p, c0 = col.p, col.colors[0]
    if convention == "centered":
        arrows = [((c0 - j) % p, (c0 + j) % p) for j in range(1, col.q + 1)]
    elif convention == "sorted":
        arrows = sorted({tuple(sorted((m, reflect(m, c0, p)))) for m in range(p) if m != c0})
    else:
        raise ValueError(f"unknown arrow convention {convention!r}")
    return [(c0, c0)] + arrows


def _check_arrows(arrows: Sequence[tuple[int, int]], color: int, p: int, arc: int) -> None:
    t0, h0 = arrows[0]
    if t0 != color or h0 != color:
        raise ClosureFailure(f"arc {arc}: degenerate arrow not at color {color}")
    seen = {color}
    for t, h in arrows[1:]:
        if t == h or reflect(t, color, p) != h or t in seen or h in seen:
            raise ClosureFailure(f"arc {arc}: arrows do not partition the p-gon")
        seen.update((t, h))
    if len(seen) != p:
        raise ClosureFailure(f"arc {arc}: arrows miss vertices")


@dataclass(frozen=True)
class ConfigurationDiagram:
    p: int
    n: int
    head: tuple[tuple[int, ...], ...]  # head[i][j]
    tail: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return (self.p - 1) // 2

    def dump(self) -> str:
        lines = []
        for i in range(self.n):
            arrows = " ".join(
                f"{j}:({self.tail[i][j]}→{self.head[i][j]})" for j in range(1, self.q + 1)
            )
            lines.append(f"{i}: {arrows}")
        return "\n".join(lines)


def build_configurations(
    d: OrientedDiagram,
    col: Coloring,
    initial: Sequence[tuple[int, int]] | None = None,
) -> ConfigurationDiagram:
    """Propagate the arc-0 arrows around the diagram by reflections.

    ``initial`` overrides the default arc-0 choice; it lists ``(tail, head)``
    for lifts 1..q (the degenerate arrow 0 is added automatically).
    """
    p, n = col.p, d.n
    c = col.colors
    if initial is None:
        arrows = initial_configuration(col)
    else:
        arrows = [(c[0], c[0])] + [tuple(a) for a in initial]
    _check_arrows(arrows, c[0], p, 0)

    heads, tails = [], []
    for i in range(n):
        tails.append(tuple(t for t, _ in arrows))
        heads.append(tuple(h for _, h in arrows))
        m = c[d.over[i]]
        arrows = [(reflect(t, m, p), reflect(h, m, p)) for t, h in arrows]
        _check_arrows(arrows, c[(i + 1) % n], p, (i + 1) % n)
    if tuple(t for t, _ in arrows) != tails[0] or tuple(h for _, h in arrows) != heads[0]:
        raise ClosureFailure("monodromy around the diagram is not the identity")
    return ConfigurationDiagram(p, n, tuple(heads), tuple(tails))


class CrossingCoefficients:
    """Tables a, b, eps_a, eps_b, C_a, C_b for one colored diagram.

    ``a[i][j]`` / ``b[i][j]`` are the lifts of the over arc at crossing ``i``
    meeting the head / tail of arrow ``j`` on arc ``i``; ``eps_a``/``eps_b``
    record whether they meet head-to-head (+1) or head-to-tail (-1), and are 0
    when the meeting lift is the index-1 one. ``c_a[k][i][j]`` and
    ``c_b[k][i][j]`` are the constants for the component-``k`` system.
    """

    def __init__(self, d: OrientedDiagram, cfg: ConfigurationDiagram):
        self.d = d
        self.cfg = cfg
        n, q = cfg.n, cfg.q
        H, T = cfg.head, cfg.tail
        a = [[0] * (q + 1) for _ in range(n)]
        b = [[0] * (q + 1) for _ in range(n)]
        ea = [[0] * (q + 1) for _ in range(n)]
        eb = [[0] * (q + 1) for _ in range(n)]
        for i in range(n):
            o = d.over[i]
            # vertex -> lift index of the over arc touching it
            lift_at = {}
            for s in range(q + 1):
                lift_at[H[o][s]] = s
                lift_at[T[o][s]] = s
            for j in range(q + 1):
                a[i][j] = s = lift_at[H[i][j]]
                if s:
                    ea[i][j] = 1 if H[i][j] == H[o][s] else -1
                b[i][j] = s = lift_at[T[i][j]]
                if s:
                    eb[i][j] = 1 if T[i][j] == T[o][s] else -1
        self.a, self.b, self.eps_a, self.eps_b = a, b, ea, eb

        sign = d.sign
        c_a = []
        c_b = []
        for k in range(q + 1):
            ca_k = [[0] * (q + 1) for _ in range(n)]
            cb_k = [[0] * (q + 1) for _ in range(n)]
            for i in range(n):
                e = sign[i]
                for j in range(q + 1):
                    if a[i][j] == k and (k == 0 or e * ea[i][j] == -1):
                        ca_k[i][j] = -e
                    if b[i][j] == k and (k == 0 or e * eb[i][j] == 1):
                        cb_k[i][j] = e
            c_a.append(ca_k)
            c_b.append(cb_k)
        self.c_a, self.c_b = c_a, c_b

    @property
    def n(self) -> int:
        return self.cfg.n

    @property
    def q(self) -> int:
        return self.cfg.q

    def ab(self, i: int, j: int) -> tuple[int, int]:
        return self.a[i][j], self.b[i][j]

    def eps(self, i: int, j: int) -> tuple[int, int]:
        return self.eps_a[i][j], self.eps_b[i][j]

    def cconst(self, i: int, j: int, k: int) -> tuple[int, int]:
        return self.c_a[k][i][j], self.c_b[k][i][j]


@dataclass(frozen=True)
class ColoredDiagram:
    """A diagram together with a coloring and its derived cover data."""

    diagram: OrientedDiagram
    coloring: Coloring
    initial: tuple[tuple[int, int], ...] | None = None

    @cached_property
    def configurations(self) -> ConfigurationDiagram:
        return build_configurations(self.diagram, self.coloring, self.initial)

    @cached_property
    def coefficients(self) -> CrossingCoefficients:
        return CrossingCoefficients(self.diagram, self.configurations)
