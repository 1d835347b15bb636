"""Input validation related exceptions."""

from typing import Any, Dict, Optional

from . import SemanticsError


class ValidationFailedError(SemanticsError):
    """Base class for invalid model inputs."""

    def __init__(
        self, message: str, code: str, details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message=message, code=code, details=details, exit_code=1)


class InvalidLanguageError(ValidationFailedError):
    """A language, channel, cost or distortion violates its invariants."""

    def __init__(
        self,
        message: str = "Semantic language failed validation",
        code: str = "INVALID_LANGUAGE",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, code, details)


class DimensionMismatchError(ValidationFailedError):
    """Matrix or vector shapes do not agree."""

    def __init__(
        self,
        message: str = "Dimension mismatch",
        code: str = "DIMENSION_MISMATCH",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, code, details)


class InvalidSchemeError(ValidationFailedError):
    """A scheme name or scheme matrix cannot be used."""

    def __init__(
        self,
        message: str = "Invalid scheme",
        code: str = "INVALID_SCHEME",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, code, details)
