"""Exception types raised by the evaluators."""


class LeRoyError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LeRoyError, ValueError):
    """Argument or parameter outside the domain of an operation."""


class PoleError(DomainError):
    """Gamma-function argument is a pole (nonpositive integer)."""


class DivergentParametersError(DomainError):
    """Parameter set for which the requested series does not converge."""


class PrecisionBudgetError(LeRoyError, RuntimeError):
    """The required working precision exceeds ``max_working_digits``."""


class TermBudgetError(LeRoyError, RuntimeError):
    """The series did not reach its stopping rule within ``max_terms``."""


class QuadratureError(LeRoyError, RuntimeError):
    """Contour or real-line quadrature failed to converge."""
