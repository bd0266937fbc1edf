"""Exception hierarchy shared by all gonalkit modules."""


class GonalKitError(Exception):
    """Base class for every error raised by gonalkit."""


class InvalidParameterError(GonalKitError, ValueError):
    """A numeric parameter violates a documented precondition."""


class DivisibilityError(InvalidParameterError):
    """``p - 1`` does not divide ``n``."""


class UnsupportedCaseError(InvalidParameterError):
    """Inputs are well-formed but outside what the construction covers."""


class NonHyperbolicError(GonalKitError, ValueError):
    """A signature with non-positive reduced area was used where a hyperbolic one is needed."""


class InconsistencyError(GonalKitError, ArithmeticError):
    """Two computations that must agree did not."""


class BudgetExceeded(GonalKitError):
    """An enumeration would exceed its search-space or wall-clock budget."""

    def __init__(self, message, space_size, limit):
        super().__init__(message)
        self.space_size = space_size
        self.limit = limit
