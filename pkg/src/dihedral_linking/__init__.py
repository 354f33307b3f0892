"""Dihedral linking numbers of branch curves in irregular dihedral covers of knots."""

from .chains import ChainSolution, LinearSystem, assemble, residual, solve, solve_all
from .coloring import (
    Coloring,
    equivalence_classes,
    fox_colorings,
    is_colorable,
    make_coloring,
    reflect,
)
from .cover import (
    ColoredDiagram,
    ConfigurationDiagram,
    CrossingCoefficients,
    build_configurations,
    initial_configuration,
)
from .knot import (
    BraidWord,
    OrientedDiagram,
    braid_closure,
    diagram_from_braid,
    diagram_from_lists,
    ensure_even,
    parse_braid,
)
from .linking import INF, DLNResult, dln, format_value, int_term, lk_pair, parse_value

__version__ = "0.1.0"
