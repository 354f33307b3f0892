"""Exception types shared across the package."""


class DihedralLinkingError(ValueError):
    """Base class for recoverable input errors."""


class BraidError(DihedralLinkingError):
    pass


class EmptyWord(BraidError):
    pass


class ZeroLetter(BraidError):
    pass


class NotAKnot(BraidError):
    pass


class DiagramError(DihedralLinkingError):
    pass


class OddLength(DiagramError):
    pass


class LengthMismatch(DiagramError):
    pass


class RangeError(DiagramError):
    pass


class UnsupportedP(DihedralLinkingError):
    pass


class InvalidColoring(DihedralLinkingError):
    pass


class DimensionMismatch(DihedralLinkingError):
    pass


class NotSolvable(DihedralLinkingError):
    """Raised when intersection terms are requested for a component
    whose chain system has no rational solution."""


class ClosureFailure(AssertionError):
    """Monodromy around the diagram did not return to the arc-0 configuration."""


class SymmetryViolation(AssertionError):
    """lk(K^j, K^k) and lk(K^k, K^j) disagree."""
