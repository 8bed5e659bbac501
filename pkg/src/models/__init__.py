"""
Module: models

This module consolidates the pydantic models used in the application, providing
a unified interface for importing them.

Example:
    >>> from src.models import SkoroConfig, SolverConfig, FunctionDocument
"""

from .config import DEFAULT_SOLVER, LoggingConfig, MetaConfig, OutputConfig, SkoroConfig, SolverConfig
from .document import DocumentKind, FunctionDocument

__all__ = [
    "DEFAULT_SOLVER",
    "DocumentKind",
    "FunctionDocument",
    "LoggingConfig",
    "MetaConfig",
    "OutputConfig",
    "SkoroConfig",
    "SolverConfig",
]
