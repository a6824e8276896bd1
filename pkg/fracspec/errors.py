"""Exception hierarchy. Each error carries the CLI exit code it maps to."""
from __future__ import annotations


class FracspecError(Exception):
    """Base error for the solver and the benchmark harness."""

    exit_code = 1


class DomainError(FracspecError, ValueError):
    """Argument outside the domain of an operation (t <= 0, bad index, ...)."""

    exit_code = 2


class UnsupportedExponentError(DomainError):
    """Power exponent the power rule (or a classical derivative) cannot handle."""

    def __init__(self, exponent: float, message: str):
        super().__init__(f"{message} (exponent p={exponent:g})")
        self.exponent = exponent


class ProblemValidationError(DomainError):
    """Problem definition rejected at ingestion."""


class NumericalFailure(FracspecError):
    """Linear solve failed or the assembled system is not finite."""

    exit_code = 3


class ArtifactIOError(FracspecError):
    """Reading a problem file or writing a CSV / plot script failed."""

    exit_code = 4


class IllConditionedWarning(UserWarning):
    """Least-squares system numerically rank deficient. Result still returned."""
