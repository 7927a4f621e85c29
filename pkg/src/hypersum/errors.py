"""Exception types shared by the numerical modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested quantity."""


class PoleError(ArithmeticError):
    """The requested point is a pole of the function."""


class ConvergenceError(ArithmeticError):
    """A series or continued fraction cannot converge at the given argument.

    ``partial`` carries the last partial result when one exists.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class TruncationError(ConvergenceError):
    """The term cap was hit before the requested tolerance was reached."""
