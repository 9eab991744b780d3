"""Exception types shared across the library."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Evaluation requested exactly at a singular point."""


class AsymptoticRangeError(DomainError):
    """Argument outside the validity range of an asymptotic expansion."""


class CapabilityError(ValueError):
    """Request exceeds a documented capability limit (e.g. maximum order)."""


class AccuracyError(RuntimeError):
    """A quadrature or iteration exhausted its budget before reaching the
    requested tolerance.  Carries the best estimate obtained so far."""

    def __init__(self, message, best=None, estimated_error=None):
        super().__init__(message)
        self.best = best
        self.estimated_error = estimated_error


class ConvergenceError(RuntimeError):
    """Truncation refinement hit its cap before the residual target.
    Carries the best solution so that callers can record and continue."""

    def __init__(self, message, best=None, residual=None):
        super().__init__(message)
        self.best = best
        self.residual = residual


class ConfigError(ValueError):
    """Malformed experiment configuration; ``path`` names the offending field."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
