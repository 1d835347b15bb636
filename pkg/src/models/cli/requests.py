"""Argument models for CLI subcommands.

Each subcommand's parsed arguments are validated into one of these models
before the handler runs.
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..domain import PriorChoice


class ValidateRequest(BaseModel):
    """Arguments of `validate`."""

    spec: Path = Field(..., description="Language spec file")


class RegionRequest(BaseModel):
    """Arguments of `region enc|dec|csed`."""

    kind: Literal["enc", "dec", "csed"] = Field(..., description="Region to compute")
    spec: Path = Field(..., description="Language spec file")
    tie_break: str = Field(
        default="lexicographic",
        pattern=r"^(lexicographic|seeded:-?\d+)$",
        description="Frontier tie-break policy",
    )
    csv: Optional[Path] = Field(default=None, description="CSV export path")


class DecodeRequest(BaseModel):
    """Arguments of `decode`."""

    spec: Path = Field(..., description="Language spec file")
    prior: PriorChoice = Field(default=PriorChoice.RX, description="Decoding prior")
    refine: bool = Field(default=False, description="Refine Q instead of MAP decoding")


class CheckRequest(BaseModel):
    """Arguments of `check self-consistency|hamming-opt|theorem4`."""

    kind: Literal["self-consistency", "hamming-opt", "theorem4"] = Field(
        ..., description="Condition to check"
    )
    spec: Path = Field(..., description="Language spec file")


class CompareRequest(BaseModel):
    """Arguments of `compare`."""

    spec: Path = Field(..., description="Language spec file")
    tie_break: str = Field(
        default="lexicographic",
        pattern=r"^(lexicographic|seeded:-?\d+)$",
        description="Frontier tie-break policy",
    )


class OracleRequest(BaseModel):
    """Arguments of `oracle frontier|decoders|global`."""

    kind: Literal["frontier", "decoders", "global"] = Field(
        ..., description="Enumeration to run"
    )
    spec: Path = Field(..., description="Language spec file")
    budget: Optional[int] = Field(
        default=None, ge=1, description="Override of both enumeration budgets"
    )


class SimulateRequest(BaseModel):
    """Arguments of `simulate`."""

    spec: Path = Field(..., description="Language spec file")
    scheme: str = Field(..., min_length=1, description="Named scheme pair")
    trials: int = Field(..., ge=1, description="Number of one-shot trials")
    seed: int = Field(..., ge=0, description="Random seed")


class ExampleRequest(BaseModel):
    """Arguments of `example gridworld|nodshake`."""

    name: Literal["gridworld", "nodshake"] = Field(..., description="Example name")
    out: Optional[Path] = Field(default=None, description="Output spec path")
