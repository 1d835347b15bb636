"""Semantic decoding: psi tables, the decoding segment, MAP decoders and refinements."""

from fractions import Fraction
from typing import Optional, Sequence

from ..middleware.exceptions import DomainError, NonHammingDistortionError
from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    DecodingRegion,
    DecodingScheme,
    DistortionCostPoint,
    DistortionMeasure,
    HammingOptimalityReport,
    MessageArgmax,
    PriorChoice,
    PsiTable,
    Refinement,
    SemanticChannel,
    SemanticLanguage,
    SimplexPoint,
)
from ..models.domain.rational import IndexVector, Matrix
from .core import ZERO, check_dimensions


def _argmin(values: Sequence[Fraction]) -> IndexVector:
    best = min(values)
    return tuple(i for i, value in enumerate(values) if value == best)


def _argmax(values: Sequence[Fraction]) -> IndexVector:
    best = max(values)
    return tuple(i for i, value in enumerate(values) if value == best)


def _require_hamming(distortion: DistortionMeasure, operation: str) -> None:
    if not distortion.is_hamming:
        raise NonHammingDistortionError(
            f"{operation} requires the Hamming distortion",
            details={"operation": operation},
        )


def received_likelihood(lang: SemanticLanguage, channel: SemanticChannel) -> Matrix:
    """p(s_hat|w) = sum_s p(s|w) c(s_hat|s), as an N x M matrix."""
    check_dimensions(lang, channel=channel)
    if channel.is_error_free:
        return lang.expression
    p, c = lang.expression, channel.kernel
    return tuple(
        tuple(
            sum(
                (p[n][s] * c[s][r] for s in range(lang.n_messages) if p[n][s]),
                ZERO,
            )
            for r in range(lang.n_messages)
        )
        for n in range(lang.n_meanings)
    )


def _weighted_likelihood(
    lang: SemanticLanguage, likelihood: Matrix, message: int, prior: PriorChoice
) -> tuple[Fraction, ...]:
    weights = lang.prior(prior)
    return tuple(weights[n] * likelihood[n][message] for n in range(lang.n_meanings))


def psi_table(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    prior: PriorChoice = PriorChoice.TX,
) -> PsiTable:
    """Expected distortion of decoding each received message as each meaning.

    Args:
        lang: Semantic language.
        channel: Semantic channel.
        distortion: Distortion measure.
        prior: Prior weighting the sent meanings, the transmitter's by default.

    Returns:
        PsiTable: N x M table psi(w_hat, s_hat).
    """
    check_dimensions(lang, channel=channel, distortion=distortion)
    likelihood = received_likelihood(lang, channel)
    weights = lang.prior(prior)
    d = distortion.matrix
    values = tuple(
        tuple(
            sum(
                (
                    weights[n] * likelihood[n][r] * d[n][k]
                    for n in range(lang.n_meanings)
                ),
                ZERO,
            )
            for r in range(lang.n_messages)
        )
        for k in range(lang.n_meanings)
    )
    return PsiTable(prior=prior, values=values)


def expression_cost(lang: SemanticLanguage, cost: CostFunction) -> Fraction:
    """L_P = sum_w p(w) sum_s p(s|w) l(s), the only cost a decoder can see."""
    check_dimensions(lang, cost=cost)
    return sum(
        (
            lang.tx_prior[n] * lang.expression[n][m] * cost.costs[m]
            for n in range(lang.n_meanings)
            for m in range(lang.n_messages)
        ),
        ZERO,
    )


def decoder_distortion(
    decoder: DecodingScheme,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    table: Optional[PsiTable] = None,
) -> Fraction:
    """D_{P,V} = sum over s_hat, w_hat of v(w_hat|s_hat) psi_p(w_hat, s_hat).

    Args:
        decoder: Decoding scheme V.
        lang: Semantic language.
        channel: Semantic channel.
        distortion: Distortion measure.
        table: Precomputed transmitter-prior psi table.

    Returns:
        Fraction: Average distortion of the language's expression with V.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, decoder=decoder)
    psi = table if table is not None else psi_table(lang, channel, distortion)
    if psi.prior != PriorChoice.TX:
        raise DomainError(
            "Decoder distortion needs the transmitter-prior psi table",
            details={"prior": psi.prior.value},
        )
    return sum(
        (
            decoder.matrix[r][k] * psi.values[k][r]
            for r in range(lang.n_messages)
            for k in range(lang.n_meanings)
            if decoder.matrix[r][k]
        ),
        ZERO,
    )


def baseline_distortion(
    lang: SemanticLanguage, channel: SemanticChannel, distortion: DistortionMeasure
) -> Fraction:
    """D_{P,Q}, the distortion of the language used as it is."""
    return decoder_distortion(
        DecodingScheme(matrix=lang.interpretation), lang, channel, distortion
    )


def map_decoder(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    use_prior: PriorChoice = PriorChoice.RX,
) -> DecodingScheme:
    """Deterministic decoder minimizing psi under the chosen prior.

    Every received message goes to the lowest-index meaning attaining
    argmin psi(w_hat, s_hat). With the receiver prior this is V*_q, the best
    decoder the receiver can perceive.
    """
    psi = psi_table(lang, channel, distortion, prior=use_prior)
    indices = tuple(_argmin(psi.column(r))[0] for r in range(lang.n_messages))
    logger.debug(
        "MAP decoder built", extra={"prior": use_prior.value, "decoder": indices}
    )
    return DecodingScheme.deterministic(indices, n_meanings=lang.n_meanings)


def decoding_region(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
) -> DecodingRegion:
    """The vertical segment {L_P} x [D_lo, D_hi] reachable by semantic decoding.

    D_lo and D_hi are attained by the deterministic decoders taking, per
    received message, the argmin and argmax of psi_p, lowest index on ties.

    Returns:
        DecodingRegion: Both endpoints with their decoders.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    psi = psi_table(lang, channel, distortion)
    level = expression_cost(lang, cost)
    lowest = tuple(_argmin(psi.column(r))[0] for r in range(lang.n_messages))
    highest = tuple(_argmax(psi.column(r))[0] for r in range(lang.n_messages))
    lower_decoder = DecodingScheme.deterministic(lowest, n_meanings=lang.n_meanings)
    upper_decoder = DecodingScheme.deterministic(highest, n_meanings=lang.n_meanings)
    lower = DistortionCostPoint(
        cost=level,
        distortion=decoder_distortion(lower_decoder, lang, channel, distortion, psi),
        decoder=lowest,
        label="decoding-lower",
    )
    upper = DistortionCostPoint(
        cost=level,
        distortion=decoder_distortion(upper_decoder, lang, channel, distortion, psi),
        decoder=highest,
        label="decoding-upper",
    )
    return DecodingRegion(
        cost=level,
        lower=lower,
        upper=upper,
        lower_decoder=lower_decoder,
        upper_decoder=upper_decoder,
    )


def hamming_optimality_check(
    lang: SemanticLanguage, channel: SemanticChannel, distortion: DistortionMeasure
) -> HammingOptimalityReport:
    """Test argmax_w q(w)p(s_hat|w) ⊆ argmax_w p(w)p(s_hat|w) for every s_hat.

    Messages never received under the transmitter prior are skipped, they
    carry no distortion.

    Raises:
        NonHammingDistortionError: If the distortion is not Hamming.
    """
    _require_hamming(distortion, "hamming optimality check")
    check_dimensions(lang, channel=channel, distortion=distortion)
    likelihood = received_likelihood(lang, channel)
    messages = []
    for r in range(lang.n_messages):
        sent = _weighted_likelihood(lang, likelihood, r, PriorChoice.TX)
        if not any(sent):
            continue
        received = _weighted_likelihood(lang, likelihood, r, PriorChoice.RX)
        messages.append(
            MessageArgmax(
                message=r, rx_argmax=_argmax(received), tx_argmax=_argmax(sent)
            )
        )
    return HammingOptimalityReport(
        optimal=all(item.satisfied for item in messages), messages=tuple(messages)
    )


def simplex_embed(
    message: int,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    use_prior: PriorChoice = PriorChoice.RX,
) -> SimplexPoint:
    """Normalize prior(w) p(s_hat|w) onto the probability simplex.

    The simplex is partitioned into one closed region per meaning, the set
    where that meaning has the largest coordinate. The point records every
    region holding it and the decoded meaning.

    Raises:
        DomainError: If the message is unreachable under the chosen prior.
    """
    check_dimensions(lang, channel=channel)
    if not 0 <= message < lang.n_messages:
        raise DomainError("Message index out of range", details={"message": message})
    weighted = _weighted_likelihood(
        lang, received_likelihood(lang, channel), message, use_prior
    )
    total = sum(weighted, ZERO)
    if total == 0:
        raise DomainError(
            "Message is never received under this prior",
            details={"message": message, "prior": use_prior.value},
        )
    alpha = tuple(value / total for value in weighted)
    regions = _argmax(alpha)
    return SimplexPoint(
        message=message, alpha=alpha, regions=regions, region=regions[0]
    )


def hamming_map_distortion(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    use_prior: PriorChoice = PriorChoice.RX,
) -> Fraction:
    """D_{P,V*} as one minus the probability of decoding successfully.

    Sums p(w_hat(s_hat)) p(s_hat|w_hat(s_hat)) over received messages, where
    w_hat(s_hat) is the lowest-index argmax of prior(w) p(s_hat|w).
    """
    _require_hamming(distortion, "hamming map distortion")
    likelihood = received_likelihood(lang, channel)
    success = ZERO
    for r in range(lang.n_messages):
        decoded = _argmax(_weighted_likelihood(lang, likelihood, r, use_prior))[0]
        success += lang.tx_prior[decoded] * likelihood[decoded][r]
    return 1 - success


def decoding_gap(
    lang: SemanticLanguage, channel: SemanticChannel, distortion: DistortionMeasure
) -> Fraction:
    """D_{P,Q} - D_{P,V*_q}; nonnegative whenever p = q.

    Raises:
        NonHammingDistortionError: If the distortion is not Hamming.
    """
    _require_hamming(distortion, "decoding gap")
    decoder = map_decoder(lang, channel, distortion, use_prior=PriorChoice.RX)
    return baseline_distortion(lang, channel, distortion) - decoder_distortion(
        decoder, lang, channel, distortion
    )


def _collapse_target(
    senders: IndexVector, interpreted: IndexVector, d: Matrix
) -> Optional[int]:
    for best in interpreted:
        others = [k for k in interpreted if k != best]
        worst_case = max(d[n][best] for n in senders)
        if worst_case <= min(d[n][k] for n in senders for k in others):
            return best
    return None


def _removal_target(
    senders: IndexVector, interpreted: IndexVector, d: Matrix
) -> Optional[int]:
    for worst in interpreted:
        others = [k for k in interpreted if k != worst]
        best_case = min(d[n][worst] for n in senders)
        if best_case >= max(d[n][k] for n in senders for k in others):
            return worst
    return None


def refinement_plan(
    lang: SemanticLanguage, channel: SemanticChannel, distortion: DistortionMeasure
) -> tuple[tuple[Refinement, Optional[int]], ...]:
    """Which refinement applies to each received message, and to which meaning.

    For s_hat, the interpreted set holds meanings with q(w|s_hat) > 0 and the
    sender set meanings with p(s_hat|w) > 0. Collapsing onto a meaning at
    least as close to every sender as any other interpreted meaning is tried
    first, then removing a meaning at least as far from every sender as any
    other. Messages with fewer than two interpreted meanings or no sender
    are left alone.
    """
    check_dimensions(lang, channel=channel, distortion=distortion)
    likelihood = received_likelihood(lang, channel)
    d = distortion.matrix
    plan: list[tuple[Refinement, Optional[int]]] = []
    for r in range(lang.n_messages):
        interpreted = tuple(
            n for n in range(lang.n_meanings) if lang.interpretation[r][n] > 0
        )
        senders = tuple(n for n in range(lang.n_meanings) if likelihood[n][r] > 0)
        if len(interpreted) < 2 or not senders:
            plan.append((Refinement.NONE, None))
            continue
        best = _collapse_target(senders, interpreted, d)
        if best is not None:
            plan.append((Refinement.COLLAPSE_BEST, best))
            continue
        worst = _removal_target(senders, interpreted, d)
        if worst is not None:
            plan.append((Refinement.REMOVE_WORST, worst))
        else:
            plan.append((Refinement.NONE, None))
    return tuple(plan)


def refine_interpretation(
    lang: SemanticLanguage, channel: SemanticChannel, distortion: DistortionMeasure
) -> DecodingScheme:
    """Improve the interpretation Q message by message without raising D_{P,Q}.

    Returns:
        DecodingScheme: Q with every applicable refinement applied.
    """
    rows: list[tuple[Fraction, ...]] = []
    plan = refinement_plan(lang, channel, distortion)
    for r, (refinement, target) in enumerate(plan):
        row = lang.interpretation[r]
        if refinement == Refinement.COLLAPSE_BEST:
            row = tuple(Fraction(int(n == target)) for n in range(lang.n_meanings))
        elif refinement == Refinement.REMOVE_WORST:
            remaining = 1 - row[target]
            row = tuple(
                ZERO if n == target else value / remaining
                for n, value in enumerate(row)
            )
        rows.append(row)
    logger.debug(
        "Interpretation refined",
        extra={"plan": [refinement.value for refinement, _ in plan]},
    )
    return DecodingScheme(matrix=tuple(rows))
