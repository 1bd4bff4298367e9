"""Exception types shared across the package."""


class FpviError(Exception):
    """Base class for all package errors."""


class ParameterError(FpviError, ValueError):
    """A scalar argument lies outside its admissible range."""


class DimensionError(FpviError, ValueError):
    """A vector or matrix does not conform to the ambient space."""


class ConfigurationError(FpviError, ValueError):
    """A descriptor, family, or run configuration is internally inconsistent."""


class NumericalError(FpviError, RuntimeError):
    """A numerical routine failed in a way that should not occur for valid input."""


class NonconvergenceError(FpviError, RuntimeError):
    """An inner solve exhausted its iteration budget before reaching tolerance.

    Carries the partial trace in ``trace`` when available.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class DivergenceError(FpviError, RuntimeError):
    """Iterates became non-finite, signalling an infeasible configuration."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class OracleError(FpviError, RuntimeError):
    """An independent oracle failed to certify its own result."""
