"""Exception types shared across the package."""


class RotorCoverError(Exception):
    """Base class for errors raised by this package."""


class GraphInputError(RotorCoverError):
    """The base graph description is malformed or violates a precondition."""


class CapExceededError(RotorCoverError):
    """A requested computation would exceed the configured size cap."""


class ConvergenceError(RotorCoverError):
    """An iterative method hit its iteration limit before converging."""


class UnsupportedRegimeError(RotorCoverError):
    """The requested quantity is undefined or meaningless for this graph."""
