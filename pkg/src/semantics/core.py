"""Basic functionals of a semantic language: validation, phi, cost and distortion."""

import math
from fractions import Fraction
from typing import Optional, Sequence

from ..middleware.exceptions import DimensionMismatchError, DomainError
from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    DecodingScheme,
    DistortionMeasure,
    EncodingScheme,
    SelfConsistencyReport,
    SemanticChannel,
    SemanticLanguage,
    SemanticSystem,
    ValidationIssue,
    ValidationReport,
)
from ..models.domain.rational import Matrix

ZERO = Fraction(0)


def check_dimensions(
    lang: SemanticLanguage,
    channel: Optional[SemanticChannel] = None,
    distortion: Optional[DistortionMeasure] = None,
    cost: Optional[CostFunction] = None,
    encoder: Optional[EncodingScheme] = None,
    decoder: Optional[DecodingScheme] = None,
) -> None:
    """Raise DimensionMismatchError if any companion does not fit the language."""
    n, m = lang.n_meanings, lang.n_messages
    sizes = {
        "channel": (channel.size, m) if channel else None,
        "distortion": (distortion.size, n) if distortion else None,
        "cost": (cost.size, m) if cost else None,
        "encoder": ((encoder.n_meanings, encoder.n_messages), (n, m))
        if encoder
        else None,
        "decoder": ((decoder.n_messages, decoder.n_meanings), (m, n))
        if decoder
        else None,
    }
    for name, pair in sizes.items():
        if pair is not None and pair[0] != pair[1]:
            raise DimensionMismatchError(
                f"{name} does not match the language",
                details={"name": name, "actual": pair[0], "expected": pair[1]},
            )


def _check_distribution(
    values: Sequence[Fraction], section: str, index: Optional[int]
) -> list[ValidationIssue]:
    issues = []
    where = f"{section} row {index}" if index is not None else section
    negative = [i for i, value in enumerate(values) if value < 0]
    if negative:
        issues.append(
            ValidationIssue(
                section=section,
                index=index,
                message=f"{where} has negative entries at {negative}",
            )
        )
    if any(value > 1 for value in values):
        issues.append(
            ValidationIssue(
                section=section, index=index, message=f"{where} has entries above 1"
            )
        )
    total = sum(values, ZERO)
    if total != 1:
        issues.append(
            ValidationIssue(
                section=section,
                index=index,
                message=f"{where} sums to {total}, expected 1",
            )
        )
    return issues


def validate_language(
    lang: SemanticLanguage,
    cost: Optional[CostFunction] = None,
    channel: Optional[SemanticChannel] = None,
    distortion: Optional[DistortionMeasure] = None,
) -> ValidationReport:
    """Check every invariant of a language and, when given, its companions.

    Args:
        lang: Language to validate.
        cost: Message costs, checked for sign and nondecreasing order.
        channel: Channel, checked for row stochasticity.
        distortion: Distortion, checked for nonnegativity.

    Returns:
        ValidationReport: Empty issue list when everything holds.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    issues: list[ValidationIssue] = []
    for n, row in enumerate(lang.expression):
        issues.extend(_check_distribution(row, "expression", n))
    for m, row in enumerate(lang.interpretation):
        issues.extend(_check_distribution(row, "interpretation", m))
    issues.extend(_check_distribution(lang.tx_prior, "tx_prior", None))
    issues.extend(_check_distribution(lang.rx_prior, "rx_prior", None))

    if cost is not None:
        for m, value in enumerate(cost.costs):
            if value < 0:
                issues.append(
                    ValidationIssue(
                        section="cost",
                        index=m,
                        message=f"cost of message {m} is negative",
                    )
                )
        for m in range(1, cost.size):
            if cost.costs[m] < cost.costs[m - 1]:
                issues.append(
                    ValidationIssue(
                        section="cost",
                        index=m,
                        message=f"messages are not sorted by cost at message {m}",
                    )
                )
    if channel is not None:
        for m, row in enumerate(channel.kernel):
            issues.extend(_check_distribution(row, "channel", m))
    if distortion is not None:
        for n, row in enumerate(distortion.matrix):
            if any(value < 0 for value in row):
                issues.append(
                    ValidationIssue(
                        section="distortion",
                        index=n,
                        message=f"distortion row {n} has negative entries",
                    )
                )

    logger.debug(
        "Language validated",
        extra={
            "meanings": lang.n_meanings,
            "messages": lang.n_messages,
            "issues": len(issues),
        },
    )
    return ValidationReport(issues=tuple(issues))


def validate_system(system: SemanticSystem) -> ValidationReport:
    """Validate a language together with its channel, distortion and cost."""
    return validate_language(
        system.language,
        cost=system.cost,
        channel=system.channel,
        distortion=system.distortion,
    )


def bayes_interpretation(expression: Matrix, prior: Sequence[Fraction]) -> Matrix:
    """Build the self-consistent interpretation q(w|s) = p(s|w)p(w)/p(s).

    Messages that are never expressed get the prior itself as interpretation.

    Args:
        expression: N x M expression matrix p(s|w).
        prior: Transmitter prior p(w).

    Returns:
        Matrix: M x N interpretation, one distribution per message.
    """
    n_meanings, n_messages = len(expression), len(expression[0])
    rows = []
    for m in range(n_messages):
        joint = [prior[n] * expression[n][m] for n in range(n_meanings)]
        total = sum(joint, ZERO)
        rows.append(
            tuple(value / total for value in joint) if total else tuple(prior)
        )
    return tuple(rows)


def check_self_consistency(lang: SemanticLanguage) -> SelfConsistencyReport:
    """Test whether Q is the Bayes posterior of P under the transmitter prior.

    Messages with p(s) = 0 are reported as vacuous and skipped.

    Returns:
        SelfConsistencyReport: Verdict, first counterexample and vacuous messages.
    """
    marginal = lang.message_probability()
    vacuous = tuple(m for m in range(lang.n_messages) if marginal[m] == 0)
    for m in range(lang.n_messages):
        if marginal[m] == 0:
            continue
        for n in range(lang.n_meanings):
            expected = lang.expression[n][m] * lang.tx_prior[n] / marginal[m]
            actual = lang.interpretation[m][n]
            if expected != actual:
                return SelfConsistencyReport(
                    consistent=False,
                    meaning=n,
                    message=m,
                    expected=expected,
                    actual=actual,
                    vacuous=vacuous,
                )
    return SelfConsistencyReport(consistent=True, vacuous=vacuous)


def is_self_consistent(lang: SemanticLanguage) -> bool:
    return check_self_consistency(lang).consistent


def phi_table(
    lang: SemanticLanguage, channel: SemanticChannel, distortion: DistortionMeasure
) -> Matrix:
    """Expected distortion of sending w as s through the channel and Q.

    Returns the full N x M table of phi(w, s).
    """
    check_dimensions(lang, channel=channel, distortion=distortion)
    n_meanings, n_messages = lang.n_meanings, lang.n_messages
    q = lang.interpretation
    d = distortion.matrix
    # sum_w_hat q(w_hat|s_hat) d(w, w_hat) for every (w, s_hat)
    per_received = [
        [
            sum((q[r][k] * d[n][k] for k in range(n_meanings)), ZERO)
            for r in range(n_messages)
        ]
        for n in range(n_meanings)
    ]
    if channel.is_error_free:
        return tuple(tuple(row) for row in per_received)
    c = channel.kernel
    return tuple(
        tuple(
            sum(
                (c[s][r] * per_received[n][r] for r in range(n_messages) if c[s][r]),
                ZERO,
            )
            for s in range(n_messages)
        )
        for n in range(n_meanings)
    )


def phi(
    w: int,
    s: int,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
) -> Fraction:
    """phi(w, s) = sum over s_hat, w_hat of c(s_hat|s) q(w_hat|s_hat) d(w, w_hat).

    Args:
        w: Meaning index.
        s: Message index.
        lang: Semantic language.
        channel: Semantic channel.
        distortion: Distortion measure.

    Returns:
        Fraction: Expected distortion of expressing w as s.
    """
    check_dimensions(lang, channel=channel, distortion=distortion)
    if not (0 <= w < lang.n_meanings and 0 <= s < lang.n_messages):
        raise DimensionMismatchError(
            "Meaning or message index out of range", details={"w": w, "s": s}
        )
    q, d, c = lang.interpretation, distortion.matrix, channel.kernel
    return sum(
        (
            c[s][r] * q[r][k] * d[w][k]
            for r in range(lang.n_messages)
            if c[s][r]
            for k in range(lang.n_meanings)
        ),
        ZERO,
    )


def average_distortion_enc(
    encoder: EncodingScheme,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    table: Optional[Matrix] = None,
) -> Fraction:
    """D_{U,Q} = sum_w p(w) sum_s u(s|w) phi(w, s).

    Args:
        encoder: Encoding scheme U.
        lang: Semantic language.
        channel: Semantic channel.
        distortion: Distortion measure.
        table: Precomputed phi table, computed when absent.

    Returns:
        Fraction: Average distortion with the language's interpretation.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, encoder=encoder)
    values = table if table is not None else phi_table(lang, channel, distortion)
    return sum(
        (
            lang.tx_prior[n] * encoder.matrix[n][m] * values[n][m]
            for n in range(lang.n_meanings)
            for m in range(lang.n_messages)
            if encoder.matrix[n][m]
        ),
        ZERO,
    )


def average_distortion(
    encoder: EncodingScheme,
    decoder: DecodingScheme,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
) -> Fraction:
    """Four-fold sum of p(w) u(s|w) c(s_hat|s) v(w_hat|s_hat) d(w, w_hat).

    Returns:
        Fraction: Average distortion of the encoder and decoder pair.
    """
    check_dimensions(
        lang, channel=channel, distortion=distortion, encoder=encoder, decoder=decoder
    )
    u, c, v, d = encoder.matrix, channel.kernel, decoder.matrix, distortion.matrix
    total = ZERO
    for n in range(lang.n_meanings):
        for s in range(lang.n_messages):
            sent = lang.tx_prior[n] * u[n][s]
            if not sent:
                continue
            for r in range(lang.n_messages):
                received = sent * c[s][r]
                if not received:
                    continue
                for k in range(lang.n_meanings):
                    total += received * v[r][k] * d[n][k]
    return total


def average_cost(
    encoder: EncodingScheme, lang: SemanticLanguage, cost: CostFunction
) -> Fraction:
    """L_U = sum_w p(w) sum_s u(s|w) l(s)."""
    check_dimensions(lang, cost=cost, encoder=encoder)
    return sum(
        (
            lang.tx_prior[n] * encoder.matrix[n][m] * cost.costs[m]
            for n in range(lang.n_meanings)
            for m in range(lang.n_messages)
        ),
        ZERO,
    )


def expression_encoder(lang: SemanticLanguage) -> EncodingScheme:
    """The language's own expression P as an encoding scheme."""
    return EncodingScheme(matrix=lang.expression)


def interpretation_decoder(lang: SemanticLanguage) -> DecodingScheme:
    """The language's own interpretation Q as a decoding scheme."""
    return DecodingScheme(matrix=lang.interpretation)


def semantic_entropy(
    world_prior: Sequence[Fraction], satisfaction: Sequence[bool]
) -> float:
    """Semantic entropy -log2 of the prior mass of the worlds satisfying a message.

    Args:
        world_prior: Prior over worlds.
        satisfaction: Whether each world satisfies the message.

    Returns:
        float: Entropy in bits.

    Raises:
        DimensionMismatchError: If the vectors differ in length.
        DomainError: If no satisfying world has positive mass.
    """
    if len(world_prior) != len(satisfaction):
        raise DimensionMismatchError(
            "Prior and satisfaction table differ in length",
            details={"prior": len(world_prior), "satisfaction": len(satisfaction)},
        )
    mass = sum(
        (Fraction(p) for p, holds in zip(world_prior, satisfaction) if holds), ZERO
    )
    if mass <= 0:
        raise DomainError(
            "No satisfying world has positive prior mass",
            details={"satisfying_worlds": sum(map(bool, satisfaction))},
        )
    return -math.log2(mass.numerator) + math.log2(mass.denominator)
