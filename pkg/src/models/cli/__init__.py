"""CLI models for argument and output handling."""

from .requests import (
    CheckRequest,
    CompareRequest,
    DecodeRequest,
    ExampleRequest,
    OracleRequest,
    RegionRequest,
    SimulateRequest,
    ValidateRequest,
)
from .responses import CLIErrorResponse, CommandOutput, VersionResponse

__all__ = [
    # Requests
    "ValidateRequest",
    "RegionRequest",
    "DecodeRequest",
    "CheckRequest",
    "CompareRequest",
    "OracleRequest",
    "SimulateRequest",
    "ExampleRequest",
    # Responses
    "CLIErrorResponse",
    "CommandOutput",
    "VersionResponse",
]
