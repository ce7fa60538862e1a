"""Error types shared across the package."""


class UnsupportedCaseError(ValueError):
    """A closed form was asked for parameters outside its proven scope.

    Raised instead of silently extrapolating; callers that want the general
    value must use an enumeration route.
    """


class InconsistentBlockError(ArithmeticError):
    """A Schur elimination hit a right-hand side outside the leading block's
    column space, so the matrix cannot be a Gram matrix with that blocking."""


class ConvergenceError(ArithmeticError):
    """A floating-point eigensolve failed to converge."""
