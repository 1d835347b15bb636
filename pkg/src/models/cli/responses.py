"""Output models for CLI commands."""

from typing import Any, Dict, Optional

from pydantic import BaseModel, Field


class CLIErrorResponse(BaseModel):
    """Standardized error report printed on stderr.

    Attributes:
        message: Human-readable error message
        code: Error code string
        details: Additional error context or details
    """

    message: str = Field(..., description="Human-readable error message")
    code: str = Field(..., description="Error code string")
    details: Optional[Dict[str, Any]] = Field(
        None, description="Additional error details"
    )


class VersionResponse(BaseModel):
    """Output of `semcomm --version`."""

    version: str = Field(..., description="Package version string")
    app_env: str = Field(..., description="Configured environment")


class CommandOutput(BaseModel):
    """What a handler hands back to the CLI: text for stdout and an exit code."""

    text: str = Field(default="", description="Report printed on stdout")
    exit_code: int = Field(default=0, ge=0, description="Process exit code")
