"""Diagnostic reports returned by checks and comparisons."""

from typing import Optional

from pydantic import Field

from .points import DistortionCostPoint
from .rational import DomainModel, IndexVector, Rational
from .region import DecodingRegion
from .tie_break import TieBreakPolicy


class ValidationIssue(DomainModel):
    """One violated invariant."""

    section: str = Field(..., description="Table or vector that failed")
    index: Optional[int] = Field(default=None, description="Offending row or entry")
    message: str = Field(..., description="Human readable description")


class ValidationReport(DomainModel):
    """Outcome of validating a language and its companions."""

    issues: tuple[ValidationIssue, ...] = Field(default=())

    @property
    def passed(self) -> bool:
        return not self.issues


class SelfConsistencyReport(DomainModel):
    """Whether Q is the Bayes posterior of P under p.

    Attributes:
        consistent: True iff every tested (w, s) satisfies the posterior identity
        meaning: Meaning of the first counterexample
        message: Message of the first counterexample
        expected: Posterior p(s|w)p(w)/p(s) at the counterexample
        actual: q(w|s) at the counterexample
        vacuous: Messages skipped because p(s) = 0
    """

    consistent: bool
    meaning: Optional[int] = None
    message: Optional[int] = None
    expected: Optional[Rational] = None
    actual: Optional[Rational] = None
    vacuous: IndexVector = ()


class MessageArgmax(DomainModel):
    """Argmax sets of prior(w) p(s_hat|w) for one received message."""

    message: int
    rx_argmax: IndexVector
    tx_argmax: IndexVector

    @property
    def satisfied(self) -> bool:
        return set(self.rx_argmax) <= set(self.tx_argmax)


class HammingOptimalityReport(DomainModel):
    """Whether decoding with the receiver prior is optimal under Hamming distortion."""

    optimal: bool
    messages: tuple[MessageArgmax, ...]

    @property
    def violations(self) -> tuple[MessageArgmax, ...]:
        return tuple(item for item in self.messages if not item.satisfied)


class Theorem4Report(DomainModel):
    """Sufficient conditions for CSED to beat both one-sided strategies.

    Attributes:
        error_free: Hypothesis, the channel is the identity
        symmetric: Hypothesis, the distortion is symmetric
        priors_equal: Condition 1, p = q
        self_consistent: Condition 2, Q is the Bayes posterior of P
        phi_argmin_disjoint: Condition 3, argmin_s phi(w, s) pairwise disjoint
        psi_argmin_disjoint: Condition 4, argmin_w psi_q(w, s) disjoint on used messages
        used_messages: Messages used by some frontier encoder
    """

    error_free: bool
    symmetric: bool
    priors_equal: bool
    self_consistent: bool
    phi_argmin_disjoint: bool
    psi_argmin_disjoint: bool
    used_messages: IndexVector = ()

    @property
    def verdict(self) -> bool:
        return all(
            (
                self.error_free,
                self.symmetric,
                self.priors_equal,
                self.self_consistent,
                self.phi_argmin_disjoint,
                self.psi_argmin_disjoint,
            )
        )


class StrategyComparison(DomainModel):
    """Side-by-side results of every strategy for one language.

    Attributes:
        encoding_lower: Lower encoding envelope vertices
        encoding_upper: Upper encoding envelope vertices
        decoding: Decoding segment at L_P
        baseline: (L_P, D_{P,Q}) with the language's own interpretation
        csed_lower: Lower CSED hull vertices
        csed_operating: Lower-chain encoders re-decoded with V*_q
        encoding_min: Minimum distortion of semantic encoding
        decoding_min: Minimum distortion of semantic decoding
        csed_operating_min: Minimum distortion over the CSED operating points
        csed_beats_encoding: An operating point lies below the encoding envelope
        csed_loses_to_encoding: An operating point lies above the encoding envelope
        csed_beats_decoding: The CSED hull is strictly below D_lo at L_P
        tie_break: Policy used to build the frontier
    """

    encoding_lower: tuple[DistortionCostPoint, ...]
    encoding_upper: tuple[DistortionCostPoint, ...]
    decoding: DecodingRegion
    baseline: DistortionCostPoint
    csed_lower: tuple[DistortionCostPoint, ...]
    csed_operating: tuple[DistortionCostPoint, ...]
    encoding_min: Rational
    decoding_min: Rational
    csed_operating_min: Rational
    csed_beats_encoding: bool
    csed_loses_to_encoding: bool
    csed_beats_decoding: Optional[bool] = None
    tie_break: TieBreakPolicy = Field(default_factory=TieBreakPolicy)


class CriticalPoints(DomainModel):
    """The eight extreme points of the encoding region, lower then upper."""

    lower: tuple[DistortionCostPoint, ...] = Field(..., min_length=4, max_length=4)
    upper: tuple[DistortionCostPoint, ...] = Field(..., min_length=4, max_length=4)

    @property
    def all(self) -> tuple[DistortionCostPoint, ...]:
        return self.lower + self.upper


