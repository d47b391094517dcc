"""Exception and warning types shared across the package."""


class SphereMinError(Exception):
    """Base class for all package-specific errors."""


class InvalidToleranceError(SphereMinError, ValueError):
    """Requested tolerance is outside the supported range (0, 1e-2]."""


class NonConvergentError(SphereMinError, ArithmeticError):
    """The survival-power integral has a tail that cannot be bounded below
    the requested tolerance; the underlying expectation is divergent or
    numerically indistinguishable from divergent."""


class HypothesisViolatedError(SphereMinError, ValueError):
    """An asymptotic formula was requested for a distribution that violates
    one of its hypotheses.

    ``condition`` is ``"density"`` (density at zero is 0, infinite, or
    undefined) or ``"tail"`` (no integrable survival power is known).
    """

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


class HypothesisWarning(UserWarning):
    """Non-fatal hypothesis problem: the result is still returned, but the
    asymptotic guarantee may not apply."""
