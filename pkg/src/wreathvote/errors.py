"""Exception hierarchy shared across the package."""


class WreathvoteError(Exception):
    """Base class for all package-specific errors."""


class SizeGuardError(WreathvoteError):
    """A requested computation exceeds a configured size cap."""


class DimensionMismatchError(WreathvoteError):
    """Operands have incompatible dimensions or sizes."""


class InconsistentSystemError(WreathvoteError):
    """A linear system has no exact solution."""


class NotScalarError(WreathvoteError):
    """A map that must act as a scalar on an irreducible component does not.

    Raised only on internal inconsistency: every distance-weight rule is
    neutral, so this signals a bug rather than bad input.
    """


class InfeasibleError(WreathvoteError):
    """A paradox-profile instance violates the solvability preconditions."""
