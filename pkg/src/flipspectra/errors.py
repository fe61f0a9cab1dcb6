"""Shared exception types; the CLI maps these onto exit codes."""


class InvalidInputError(ValueError):
    """Arguments violate a documented precondition."""


class RangeError(InvalidInputError):
    """Numeric argument outside the supported range."""


class NotPresentError(InvalidInputError):
    """A referenced element is absent from its container."""


class CapacityError(RuntimeError):
    """Instance exceeds a configured size limit."""


class ConvergenceError(RuntimeError):
    """Iterative solver ran out of iterations.

    The best estimate reached so far is attached as ``best`` (a
    SpectralResult) so callers can inspect how close the run got.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
