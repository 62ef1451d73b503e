"""Exception hierarchy shared across the package."""


class FimaxError(Exception):
    """Base class for all package-specific errors."""


class IntegrationError(FimaxError):
    """Base class for adaptive-integration failures."""


class StepUnderflow(IntegrationError):
    """The error controller demanded a step smaller than ``h_min``."""


class MaxStepsExceeded(IntegrationError):
    """The integrator hit its step budget before reaching the end time."""


class NonFiniteState(IntegrationError):
    """A state component (or field value) became NaN or infinite."""


class OutOfDomain(FimaxError):
    """Trajectory evaluated outside its time span."""


class NonFiniteResult(FimaxError):
    """A numerical routine produced NaN or infinite output."""


class DimensionMismatch(FimaxError):
    """Array arguments do not match the declared model dimensions."""


class ValidationFailed(FimaxError):
    """An analytic derivative disagrees with its finite-difference oracle."""


class SingularCovariance(FimaxError):
    """Measurement covariance is not symmetric positive definite."""


class SingularInformation(FimaxError):
    """Fisher information is (numerically) singular.

    Carries the offending parameter-space direction when known.
    """

    def __init__(self, message, null_direction=None):
        super().__init__(message)
        self.null_direction = null_direction


class DegenerateEigenvalue(FimaxError):
    """The minimum eigenvalue is not simple; eigenvector choice is ambiguous."""


class RiccatiBlowup(FimaxError):
    """Backward Riccati integration produced a non-finite solution."""


class LinesearchFailed(FimaxError):
    """No Armijo step achieved sufficient decrease within the backtrack budget."""


class StillSingular(FimaxError):
    """Heuristic perturbation failed to make the information matrix regular."""


class ConfigError(FimaxError):
    """Experiment configuration is missing, malformed, or violates invariants."""
