"""Exception and warning types shared across the package."""


class WeightedKSError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(WeightedKSError, ValueError):
    """A parameter is outside the domain a routine supports."""


class NonConvergenceError(WeightedKSError, ArithmeticError):
    """An iterative evaluation hit its term or iteration cap before converging."""


class BracketError(WeightedKSError, ArithmeticError):
    """A sign-change bracket for a root could not be established."""


class DomainError(WeightedKSError, ValueError):
    """An argument lies outside the mathematically supported domain."""


class NoSolutionError(WeightedKSError, ValueError):
    """The requested value is not attainable within the supported range."""


class InvalidDataError(WeightedKSError, ValueError):
    """Input data is unusable (empty, non-numeric, or non-finite)."""


class DegenerateNullError(WeightedKSError, ValueError):
    """The null distribution maps too much of the sample onto a single endpoint."""


class EmptyWindowError(WeightedKSError, ValueError):
    """The quantile window contains no quantiles to test."""


class ConfigError(WeightedKSError, ValueError):
    """A simulation configuration value is unusable."""


class InsufficientDataError(WeightedKSError, ValueError):
    """Too few usable points for the requested estimate."""


class AsymptoticRegimeWarning(UserWarning):
    """The large-sample law is being evaluated outside its comfort zone."""


class ClampedDataWarning(UserWarning):
    """Transformed values hit the unit-interval endpoints and were clamped."""
