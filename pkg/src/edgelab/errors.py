"""Typed domain errors for edgelab.

Each error carries a stable, machine-readable ``code`` so the CLI and the
experiment harness can map failures to exit codes and failure counters
without inspecting human-readable message text.

All errors subclass :class:`ValueError`, so callers that catch the broad
type keep working.
"""

from __future__ import annotations

from typing import ClassVar


class EdgeLabError(ValueError):
    """Base class for edgelab domain errors.

    Subclasses define a class-level :attr:`code` and a default message.
    """

    code: ClassVar[str] = "EDGELAB_ERROR"
    default_message: ClassVar[str] = "edgelab operation failed."

    def __init__(self, message: str | None = None) -> None:
        super().__init__(message or self.default_message)


class InvalidDimensionError(EdgeLabError):
    """A matrix dimension was zero or negative."""

    code = "INVALID_DIMENSION"
    default_message = "Matrix dimension must be >= 1"


class UnsupportedDimensionError(EdgeLabError):
    """The requested dimension is valid in general but not for this quantity."""

    code = "UNSUPPORTED_DIMENSION"
    default_message = "Dimension not supported for this quantity"


class SpecValidationError(EdgeLabError):
    """An ensemble spec failed one or more moment conditions."""

    code = "SPEC_INVALID"
    default_message = "Ensemble spec failed validation"


class InvalidOrderError(EdgeLabError):
    """A cumulant, moment or Hermite order was out of range."""

    code = "INVALID_ORDER"
    default_message = "Order out of range"


class InvalidInputError(EdgeLabError):
    """Malformed arguments that are not a domain violation (empty input, bad counts)."""

    code = "INVALID_INPUT"
    default_message = "Invalid input"


class DomainError(EdgeLabError):
    """An argument lies outside the mathematical domain of the operation."""

    code = "DOMAIN"
    default_message = "Argument outside the domain of the operation"


class NumericInputError(EdgeLabError):
    """A matrix or vector carried NaN or infinite entries."""

    code = "NUMERIC_INPUT"
    default_message = "Input contains non-finite values"


class NumericError(EdgeLabError):
    """A quadrature, solver or series failed to converge."""

    code = "NUMERIC"
    default_message = "Numerical procedure did not converge"


class WrongBranchError(NumericError):
    """The Painleve II integration left the Hastings-McLeod branch."""

    code = "WRONG_BRANCH"
    default_message = (
        "Painleve II solution blew up; initial data is off the Hastings-McLeod branch"
    )


class InvalidPairError(EdgeLabError):
    """Two matrices cannot be combined (dimension or symmetry mismatch)."""

    code = "INVALID_PAIR"
    default_message = "Matrices differ in dimension or symmetry class"


class ConfigError(EdgeLabError):
    """An experiment config could not be parsed or validated."""

    code = "CONFIG"
    default_message = "Invalid experiment configuration"

    def __init__(
        self,
        message: str | None = None,
        *,
        line: int | None = None,
        key: str | None = None,
    ) -> None:
        self.line = line
        self.key = key
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + (message or self.default_message))


class SampleFailureError(EdgeLabError):
    """More than the tolerated fraction of Monte Carlo samples failed."""

    code = "SAMPLE_FAILURE"
    default_message = "Too many Monte Carlo samples failed"
