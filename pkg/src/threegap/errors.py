"""Exception hierarchy shared by the whole package."""


class ThreeGapError(Exception):
    """Base class for every error this package raises deliberately."""


class DomainError(ThreeGapError):
    """An argument lies outside the mathematical domain of the operation."""


class DepthError(ThreeGapError):
    """More continued-fraction terms were requested than are available."""


class InsufficientDepth(ThreeGapError):
    """The available continued-fraction prefix is too short to certify the result."""


class RepresentationError(ThreeGapError):
    """An internal structural invariant broke; signals a bug, not bad input."""


class CollisionError(ThreeGapError):
    """A finite orbit revisited a point, so gap counting is ill-defined."""

    def __init__(self, message: str, n: int | None = None):
        super().__init__(message)
        self.n = n


class KeaneViolation(ThreeGapError):
    """Two comparable subinterval lengths coincided, halting induction.

    Inevitable for rational length data at finite depth; callers treat it as
    a reported outcome rather than a crash.  ``state`` is the interval
    exchange at the moment of equality and ``completed_steps`` counts the
    elementary steps finished inside the current acceleration block.
    """

    def __init__(self, message: str, state=None, completed_steps: int = 0):
        super().__init__(message)
        self.state = state
        self.completed_steps = completed_steps


class TilingError(ThreeGapError):
    """Constructed subintervals failed to tile the circle exactly."""
