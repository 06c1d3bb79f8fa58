"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Rejected input: off-model point, nonpositive mass, malformed file."""


class NumericalError(ArithmeticError):
    """A computation left the regime where its accuracy is guaranteed."""


class ConvergenceError(NumericalError):
    """An iteration hit its cap before reaching tolerance.

    Carries the last iterate and the gradient norm it reached so callers
    can inspect how close the run got.
    """

    def __init__(self, message, last_iterate=None, gradient_norm=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.gradient_norm = gradient_norm
