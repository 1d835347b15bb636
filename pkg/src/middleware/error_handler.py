import functools
import sys
from enum import Enum
from typing import Any, Callable, Dict, Optional

from pydantic import BaseModel, ValidationError

from ..models.cli import CLIErrorResponse
from .exceptions import (
    BudgetExceededError,
    DimensionMismatchError,
    DomainError,
    ExportError,
    InvalidLanguageError,
    InvalidSchemeError,
    NonHammingDistortionError,
    SemanticsError,
    SpecParseError,
    UsageError,
)
from .logging import logger


class ErrorCode(Enum):
    # Validation errors
    VALIDATION_INVALID_INPUT = "VALIDATION_INVALID_INPUT"
    INVALID_LANGUAGE = "INVALID_LANGUAGE"
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    INVALID_SCHEME = "INVALID_SCHEME"

    # Domain errors
    DOMAIN_ERROR = "DOMAIN_ERROR"
    NON_HAMMING_DISTORTION = "NON_HAMMING_DISTORTION"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

    # IO errors
    SPEC_PARSE_ERROR = "SPEC_PARSE_ERROR"
    EXPORT_ERROR = "EXPORT_ERROR"
    USAGE_ERROR = "USAGE_ERROR"

    # System errors
    SYSTEM_INTERNAL_ERROR = "SYSTEM_INTERNAL_ERROR"

    @property
    def default_message(self) -> str:
        messages: Dict["ErrorCode", str] = {
            ErrorCode.VALIDATION_INVALID_INPUT: "Invalid input",
            ErrorCode.INVALID_LANGUAGE: "Semantic language failed validation",
            ErrorCode.DIMENSION_MISMATCH: "Dimension mismatch",
            ErrorCode.INVALID_SCHEME: "Invalid scheme",
            ErrorCode.DOMAIN_ERROR: "Argument outside the operation domain",
            ErrorCode.NON_HAMMING_DISTORTION: "Operation requires Hamming distortion",
            ErrorCode.BUDGET_EXCEEDED: "Enumeration budget exceeded",
            ErrorCode.SPEC_PARSE_ERROR: "Malformed language spec",
            ErrorCode.EXPORT_ERROR: "Failed to write export file",
            ErrorCode.USAGE_ERROR: "Invalid command line usage",
            ErrorCode.SYSTEM_INTERNAL_ERROR: "An unexpected error occurred",
        }
        return messages[self]

    @classmethod
    def from_exception(cls, e: Exception) -> "ErrorCode":
        """Map exceptions to error codes, most specific class first."""
        mappings: Dict[type, "ErrorCode"] = {
            ValidationError: ErrorCode.VALIDATION_INVALID_INPUT,
            InvalidLanguageError: ErrorCode.INVALID_LANGUAGE,
            DimensionMismatchError: ErrorCode.DIMENSION_MISMATCH,
            InvalidSchemeError: ErrorCode.INVALID_SCHEME,
            DomainError: ErrorCode.DOMAIN_ERROR,
            NonHammingDistortionError: ErrorCode.NON_HAMMING_DISTORTION,
            BudgetExceededError: ErrorCode.BUDGET_EXCEEDED,
            SpecParseError: ErrorCode.SPEC_PARSE_ERROR,
            ExportError: ErrorCode.EXPORT_ERROR,
            UsageError: ErrorCode.USAGE_ERROR,
        }
        for klass in type(e).__mro__:
            if klass in mappings:
                return mappings[klass]
        return ErrorCode.SYSTEM_INTERNAL_ERROR


class ErrorResponse(BaseModel):
    message: str
    code: ErrorCode
    details: Optional[Dict[str, Any]] = None

    @classmethod
    def from_code(
        cls, code: ErrorCode, details: Optional[Dict[str, Any]] = None
    ) -> "ErrorResponse":
        return cls(message=code.default_message, code=code, details=details)

    @classmethod
    def from_exception(cls, e: Exception) -> "ErrorResponse":
        """Create an ErrorResponse from an exception."""
        code = ErrorCode.from_exception(e)
        message = str(e) if str(e) else code.default_message
        details = getattr(e, "details", None)

        return cls(message=message, code=code, details=details)


def report_error(error_response: ErrorResponse) -> None:
    """Print the error as one JSON line on stderr."""
    cli_error = CLIErrorResponse(
        message=error_response.message,
        code=error_response.code.value,
        details=error_response.details,
    )
    print(cli_error.model_dump_json(), file=sys.stderr)


def error_handler_middleware(command: Callable[..., int]) -> Callable[..., int]:
    """Decorator turning exceptions raised by a CLI command into exit codes."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> int:
        try:
            return command(*args, **kwargs)

        # --- SemanticsError exceptions (our custom exceptions) ---
        except SemanticsError as e:
            logger.warning(
                f"{e.__class__.__name__}: {str(e)}",
                extra={"code": e.code, "details": e.details},
            )
            report_error(ErrorResponse.from_exception(e))
            return e.exit_code

        # --- Input Validation Errors ---
        except ValidationError as e:
            logger.warning(f"Input validation failed: {e}")
            report_error(
                ErrorResponse.from_code(
                    ErrorCode.VALIDATION_INVALID_INPUT, details={"errors": str(e)}
                )
            )
            return 1

        # --- Generic Fallback Error ---
        except Exception as e:
            logger.exception(f"Unhandled error: {e.__class__.__name__}: {str(e)}")
            report_error(
                ErrorResponse.from_code(
                    ErrorCode.SYSTEM_INTERNAL_ERROR, details={"error": str(e)}
                )
            )
            return 1

    return wrapper
