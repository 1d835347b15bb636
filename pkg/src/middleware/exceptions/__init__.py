"""Exception handling for the semantic communication toolkit."""

from typing import Any, Dict, Optional


class SemanticsError(Exception):
    """Base exception for all toolkit errors."""

    def __init__(
        self,
        message: str,
        code: str,
        details: Optional[Dict[str, Any]] = None,
        exit_code: int = 1,
    ):
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}
        self.exit_code = exit_code


from .domain import (
    BudgetExceededError,
    DomainError,
    NonHammingDistortionError,
)
from .io import ExportError, SpecParseError, UsageError
from .validation import (
    DimensionMismatchError,
    InvalidLanguageError,
    InvalidSchemeError,
    ValidationFailedError,
)

__all__ = [
    # Base
    "SemanticsError",
    # Validation Errors
    "ValidationFailedError",
    "InvalidLanguageError",
    "DimensionMismatchError",
    "InvalidSchemeError",
    # Domain Errors
    "DomainError",
    "NonHammingDistortionError",
    "BudgetExceededError",
    # I/O Errors
    "SpecParseError",
    "ExportError",
    "UsageError",
]
