"""Spec file, export and command line exceptions."""

from typing import Any, Dict, Optional

from . import SemanticsError


class SpecParseError(SemanticsError):
    """A language spec file is malformed."""

    def __init__(
        self,
        message: str = "Malformed language spec",
        line: Optional[int] = None,
        column: Optional[int] = None,
        code: str = "SPEC_PARSE_ERROR",
        details: Optional[Dict[str, Any]] = None,
    ):
        self.line = line
        self.column = column
        location = {"line": line, "column": column} if line is not None else {}
        if line is not None:
            message = f"{message} (line {line}, column {column or 1})"
        super().__init__(
            message=message,
            code=code,
            details={**location, **(details or {})},
            exit_code=1,
        )


class ExportError(SemanticsError):
    """Writing an export file failed."""

    def __init__(
        self,
        message: str = "Failed to write export file",
        code: str = "EXPORT_ERROR",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message=message, code=code, details=details, exit_code=1)


class UsageError(SemanticsError):
    """The command line was used incorrectly."""

    def __init__(
        self,
        message: str = "Invalid command line usage",
        code: str = "USAGE_ERROR",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message=message, code=code, details=details, exit_code=2)
