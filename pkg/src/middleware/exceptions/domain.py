"""Mathematical domain exceptions."""

from typing import Any, Dict, Optional

from . import SemanticsError


class DomainError(SemanticsError):
    """An operation was asked for a value outside its mathematical domain."""

    def __init__(
        self,
        message: str = "Argument outside the operation domain",
        code: str = "DOMAIN_ERROR",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message=message, code=code, details=details, exit_code=1)


class NonHammingDistortionError(DomainError):
    """The operation is only defined for Hamming distortion."""

    def __init__(
        self,
        message: str = "Operation requires Hamming distortion",
        code: str = "NON_HAMMING_DISTORTION",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, code, details)


class BudgetExceededError(DomainError):
    """Exhaustive enumeration would exceed the configured budget."""

    def __init__(
        self,
        message: str = "Enumeration budget exceeded",
        code: str = "BUDGET_EXCEEDED",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, code, details)
