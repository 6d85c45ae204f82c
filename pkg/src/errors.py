"""Exception hierarchy shared by every module."""


class GeometryError(Exception):
    """Base class for all errors raised by the library."""


class InvalidInputError(GeometryError, ValueError):
    """Malformed samples, too few samples or degenerate geometry."""


class InvariantViolationError(GeometryError, ValueError):
    """A parameter bound of an extremal family is violated."""


class NotApplicableError(GeometryError):
    """A verifier received input it is not defined for (e.g. a geodesic)."""


class TrivialProblemError(GeometryError):
    """The variational problem is trivial for the given parameters."""


class ConvergenceError(GeometryError):
    """An iterative solve stopped before reaching its tolerance."""


class ResidualCheckError(GeometryError):
    """A verified residual exceeded its configured bound."""
