"""Brute-force enumeration and Monte Carlo simulation settings."""

from typing import Optional

from pydantic import Field

from .channel import SemanticChannel
from .rational import DomainModel, IndexVector, Rational
from .schemes import DecodingScheme, EncodingScheme


class EnumerationBudget(DomainModel):
    """Upper bounds on exhaustive scheme enumeration."""

    max_encoder_count: int = Field(default=10**6, ge=1, description="Max M^N")
    max_decoder_count: int = Field(default=10**6, ge=1, description="Max N^M")


class EncodingPoint(DomainModel):
    """A deterministic encoder with its exact cost and distortion."""

    encoder: IndexVector
    cost: Rational
    distortion: Rational


class DecodingPoint(DomainModel):
    """A deterministic decoder with its exact distortion at L_P."""

    decoder: IndexVector
    distortion: Rational


class SimulationConfig(DomainModel):
    """One-shot transmission experiment.

    Attributes:
        trials: Number of independent one-shot transmissions
        seed: Seed of the random generator
        encoder: Scheme the transmitter uses
        decoder: Scheme the receiver uses
        channel: Channel override, the system channel when absent
        block_size: Trials per independently seeded block
        workers: Threads used to run blocks
    """

    trials: int = Field(..., ge=1, description="Trial count")
    seed: int = Field(..., ge=0, description="RNG seed")
    encoder: EncodingScheme = Field(..., description="Encoder under test")
    decoder: DecodingScheme = Field(..., description="Decoder under test")
    channel: Optional[SemanticChannel] = Field(default=None, description="Channel")
    block_size: int = Field(default=10_000, ge=1, description="Trials per block")
    workers: int = Field(default=1, ge=1, description="Worker threads")


class SimulationResult(DomainModel):
    """Empirical estimates from a simulation run.

    Attributes:
        trials: Number of trials run
        cost: Sample mean of the message cost, exact
        distortion: Sample mean of the distortion, exact
        cost_stderr: Standard error of the cost mean
        distortion_stderr: Standard error of the distortion mean
        message_frequency: Empirical frequency of each received message
        confusion: Counts of (sent meaning, decoded meaning)
    """

    trials: int
    cost: Rational
    distortion: Rational
    cost_stderr: float
    distortion_stderr: float
    message_frequency: tuple[Rational, ...]
    confusion: tuple[tuple[int, ...], ...]
