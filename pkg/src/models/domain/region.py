"""Distortion-cost region models for encoding, decoding and CSED."""

from fractions import Fraction
from typing import Optional

from pydantic import Field, model_validator

from .enums import PriorChoice
from .points import DistortionCostPoint
from .rational import DomainModel, IndexVector, Matrix, Rational, Vector
from .schemes import DecodingScheme, EncodingScheme
from .tie_break import TieBreakPolicy


class SixSubsets(DomainModel):
    """Pareto-dominant message subsets of one meaning over (cost, phi).

    Attributes:
        meaning: Meaning index
        lower_left: Strictly cheaper messages with strictly smaller phi
        lower_right: Strictly dearer messages with strictly larger phi
        lower: Union of the two lower sets
        upper_left: Strictly cheaper messages with strictly larger phi
        upper_right: Strictly dearer messages with strictly smaller phi
        upper: Union of the two upper sets
    """

    meaning: int = Field(..., ge=0, description="Meaning index")
    lower_left: IndexVector = Field(..., description="S_lower'")
    lower_right: IndexVector = Field(..., description="S_lower''")
    lower: IndexVector = Field(..., description="S_lower")
    upper_left: IndexVector = Field(..., description="S_upper'")
    upper_right: IndexVector = Field(..., description="S_upper''")
    upper: IndexVector = Field(..., description="S_upper")


class FrontierStep(DomainModel):
    """The move that produced a frontier vertex: one meaning switches message."""

    meaning: int = Field(..., ge=0, description="Meaning whose message changed")
    source: int = Field(..., ge=0, description="Previous message index")
    target: int = Field(..., ge=0, description="New message index")
    slope: Rational = Field(..., description="Selected G value")


class FrontierVertex(DomainModel):
    """A frontier vertex with the deterministic encoder achieving it."""

    point: DistortionCostPoint = Field(..., description="(L, D) of the encoder")
    encoder: IndexVector = Field(..., description="Message index per meaning")
    step: Optional[FrontierStep] = Field(
        default=None, description="Move leading here, absent for the first vertex"
    )


class RegionFrontier(DomainModel):
    """Lower and upper boundary chains of the encoding region.

    Attributes:
        lower: Vertices U_lower^(0..T) in construction order
        upper: Vertices U_upper^(0..T) in construction order
        subsets: Six subsets of every meaning
        tie_break: Policy used in the slope search
    """

    lower: tuple[FrontierVertex, ...] = Field(..., min_length=1)
    upper: tuple[FrontierVertex, ...] = Field(..., min_length=1)
    subsets: tuple[SixSubsets, ...] = Field(...)
    tie_break: TieBreakPolicy = Field(default_factory=TieBreakPolicy)

    @property
    def lower_points(self) -> tuple[DistortionCostPoint, ...]:
        return tuple(vertex.point for vertex in self.lower)

    @property
    def upper_points(self) -> tuple[DistortionCostPoint, ...]:
        return tuple(vertex.point for vertex in self.upper)

    @property
    def encoders(self) -> tuple[IndexVector, ...]:
        """All emitted deterministic encoders, lower chain first."""
        return tuple(v.encoder for v in self.lower) + tuple(
            v.encoder for v in self.upper
        )

    @property
    def cost_range(self) -> tuple[Fraction, Fraction]:
        return self.lower[0].point.cost, self.lower[-1].point.cost


class PsiTable(DomainModel):
    """psi_prior(w_hat, s_hat) for every decoded meaning and received message.

    Attributes:
        prior: Which prior weighted the table
        values: N x M matrix, row w_hat, column s_hat
    """

    prior: PriorChoice = Field(..., description="Prior used")
    values: Matrix = Field(..., description="psi(w_hat, s_hat)")

    def column(self, message: int) -> tuple[Fraction, ...]:
        return tuple(row[message] for row in self.values)


class SimplexPoint(DomainModel):
    """Normalized posterior of a received message on the probability simplex.

    Attributes:
        message: Received message index
        alpha: Normalized prior(w) p(s_hat|w)
        regions: Every meaning whose closed partition region holds alpha
        region: Decoded meaning, the lowest index among regions
    """

    message: int = Field(..., ge=0)
    alpha: Vector = Field(..., min_length=1)
    regions: IndexVector = Field(..., min_length=1)
    region: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_point(self) -> "SimplexPoint":
        if sum(self.alpha, Fraction(0)) != 1 or any(a < 0 for a in self.alpha):
            raise ValueError("alpha must be a probability vector")
        if self.region != min(self.regions):
            raise ValueError("region must be the lowest region index")
        return self

    def shares_region(self, other: "SimplexPoint") -> bool:
        """True when every region of this point also holds the other point."""
        return set(self.regions) <= set(other.regions)


class DecodingRegion(DomainModel):
    """The vertical decoding segment at the language's expression cost.

    Attributes:
        cost: L_P
        lower: Minimum-distortion point with its decoder
        upper: Maximum-distortion point with its decoder
    """

    cost: Rational = Field(..., description="L_P")
    lower: DistortionCostPoint = Field(..., description="(L_P, D_lo)")
    upper: DistortionCostPoint = Field(..., description="(L_P, D_hi)")
    lower_decoder: DecodingScheme = Field(..., description="Decoder achieving D_lo")
    upper_decoder: DecodingScheme = Field(..., description="Decoder achieving D_hi")


class CsedMixture(DomainModel):
    """Time sharing over frontier encoders with one fixed decoder.

    Attributes:
        weights: xi_i, nonnegative and summing to 1
        encoders: The frontier encoders mixed
        decoder: The receiver's decoder, normally V*_q
    """

    weights: tuple[Rational, ...] = Field(..., min_length=1)
    encoders: tuple[EncodingScheme, ...] = Field(..., min_length=1)
    decoder: DecodingScheme = Field(...)

    @model_validator(mode="after")
    def _check_weights(self) -> "CsedMixture":
        if len(self.weights) != len(self.encoders):
            raise ValueError("one weight per encoder is required")
        if any(weight < 0 for weight in self.weights):
            raise ValueError("mixture weights must be nonnegative")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("mixture weights must sum to 1")
        return self

    @classmethod
    def from_frontier(
        cls,
        frontier: RegionFrontier,
        weights: tuple[Fraction, ...],
        decoder: DecodingScheme,
    ) -> "CsedMixture":
        """Mix the frontier encoders, lower chain first, with the given weights."""
        encoders = tuple(
            EncodingScheme.deterministic(indices, n_messages=decoder.n_messages)
            for indices in frontier.encoders
        )
        return cls(weights=weights, encoders=encoders, decoder=decoder)


class CsedRegion(DomainModel):
    """Convex hull of the frontier encoders re-decoded with V*_q.

    Attributes:
        lower: Lower hull chain, increasing cost
        upper: Upper hull chain, increasing cost
        points: Every generating point with its encoder and decoder
        tie_break: Policy used to build the frontier
    """

    lower: tuple[DistortionCostPoint, ...] = Field(..., min_length=1)
    upper: tuple[DistortionCostPoint, ...] = Field(..., min_length=1)
    points: tuple[DistortionCostPoint, ...] = Field(..., min_length=1)
    tie_break: TieBreakPolicy = Field(default_factory=TieBreakPolicy)
