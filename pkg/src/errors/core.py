"""
Core Application Errors

Defines the base errors for the Skorokhod completion toolkit. Every error raised by
the library derives from ApplicationError so the command line can map families of
failures onto its stable exit codes.
"""

from typing import Optional


class ApplicationError(Exception):
    """Base exception for the whole application."""
    pass


class LoggingSetupError(ApplicationError):
    """Raised when the logging configuration cannot be set up."""
    pass


class DomainError(ApplicationError):
    """Raised when an argument lies outside the domain of an operation (e.g. t outside [0,1])."""
    pass


class InvariantViolation(ApplicationError):
    """Raised when a value cannot be constructed because it violates a type invariant."""
    pass


class PreconditionError(ApplicationError):
    """Raised when the precondition of an operation does not hold."""
    pass


class DocumentError(ApplicationError):
    """
    Raised when a function document cannot be parsed or validated.

    Attributes:
        line (Optional[int]): 1-based line of the offending input, when known.
        field (Optional[str]): Dotted path of the offending field, when known.
    """

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field {field}")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")


class CauchyConvergenceError(ApplicationError):
    """Raised when the gap bounds of a Cauchy sequence cannot certify a limit within tolerance."""
    pass


class OutputError(ApplicationError):
    """Raised when an output artifact cannot be written."""
    pass


__all__ = [
    "ApplicationError",
    "LoggingSetupError",
    "DomainError",
    "InvariantViolation",
    "PreconditionError",
    "DocumentError",
    "CauchyConvergenceError",
    "OutputError",
]
