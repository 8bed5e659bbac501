from .core import (
    ApplicationError,
    CauchyConvergenceError,
    DocumentError,
    DomainError,
    InvariantViolation,
    LoggingSetupError,
    OutputError,
    PreconditionError,
)

__all__ = [
    "ApplicationError",
    "CauchyConvergenceError",
    "DocumentError",
    "DomainError",
    "InvariantViolation",
    "LoggingSetupError",
    "OutputError",
    "PreconditionError",
]
