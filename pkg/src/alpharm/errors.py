"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is valid."""


class NonConvergenceError(ArithmeticError):
    """A series did not meet its tail bound within the term budget."""


class QuadratureError(ArithmeticError):
    """Adaptive quadrature exceeded its subdivision budget."""


class PreconditionError(ValueError):
    """Input data violates a documented hypothesis of a check."""
