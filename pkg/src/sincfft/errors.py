"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter or parameter combination violates a documented constraint."""


class PositivityError(ArithmeticError):
    """A quantity that must be strictly positive failed its numerical check.

    Raised e.g. when a window transform evaluates to zero or below at a
    grid point where the algorithms divide by it.
    """
