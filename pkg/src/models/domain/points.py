"""Distortion-cost points and their provenance."""

from fractions import Fraction
from typing import Optional

from pydantic import Field, field_validator

from .rational import DomainModel, IndexVector, Rational


class MixtureTerm(DomainModel):
    """One deterministic encoder inside a time-shared scheme."""

    weight: Rational = Field(..., description="Time-sharing weight")
    encoder: IndexVector = Field(..., description="Deterministic encoder indices")


class DistortionCostPoint(DomainModel):
    """An achievable (L, D) pair with the scheme that achieves it.

    Attributes:
        cost: Average cost L
        distortion: Average distortion D
        encoder: Deterministic encoder (message index per meaning), if any
        decoder: Deterministic decoder (meaning index per message), if any
        mixture: Time-sharing terms for mixed schemes
        label: Optional name such as a critical point label
    """

    cost: Rational = Field(..., description="Average cost L")
    distortion: Rational = Field(..., description="Average distortion D")
    encoder: Optional[IndexVector] = Field(default=None, description="Encoder")
    decoder: Optional[IndexVector] = Field(default=None, description="Decoder")
    mixture: tuple[MixtureTerm, ...] = Field(
        default=(), description="Time-sharing terms"
    )
    label: Optional[str] = Field(default=None, description="Point label")

    @field_validator("cost", "distortion")
    @classmethod
    def _nonnegative(cls, value: Fraction) -> Fraction:
        if value < 0:
            raise ValueError("cost and distortion must be nonnegative")
        return value

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return self.cost, self.distortion
