"""Exception hierarchy shared by all tropspan modules.

Row and column positions quoted in messages follow the mathematical
convention and count from 1.
"""


class TropicalError(Exception):
    """Base class for every error raised by this package."""


class InversionOfZero(TropicalError):
    """Multiplicative inversion was applied to the semifield zero."""


class ShapeMismatch(TropicalError):
    """Operands have incompatible dimensions."""


class NotSquare(TropicalError):
    """A square matrix was required."""


class ZeroEntry(TropicalError):
    """Conjugation met a zero entry, which has no inverse in the carrier."""


class NotRegular(TropicalError):
    """A vector has a zero component where a regular one was required."""


class ZeroRightHandSide(TropicalError):
    """The right hand side of the equation must exceed the semifield zero."""


class NotIrreducible(TropicalError):
    """The matrix's nonzero pattern is not strongly connected."""


class TrConditionViolated(TropicalError):
    """The trace-closure feasibility condition Tr(A) <= 1 fails."""


class InvariantViolation(TropicalError):
    """An input violates a documented precondition of a solver."""


class GridTooLarge(TropicalError):
    """A brute-force enumeration would exceed the configured cap."""
