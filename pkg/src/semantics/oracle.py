"""Exhaustive enumeration of deterministic schemes."""

import itertools
from fractions import Fraction
from typing import Optional, Sequence

from ..middleware.exceptions import BudgetExceededError
from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    DecodingPoint,
    DistortionCostPoint,
    DistortionMeasure,
    EncodingPoint,
    EnumerationBudget,
    SemanticChannel,
    SemanticLanguage,
)
from .core import ZERO, check_dimensions, phi_table
from .decoding import psi_table
from .encoding import encoder_point
from .hull import lower_envelope, upper_envelope


def _require_budget(required: int, limit: int, kind: str) -> None:
    if required > limit:
        raise BudgetExceededError(
            f"Enumerating {required} {kind} exceeds the budget of {limit}",
            details={"kind": kind, "required": required, "budget": limit},
        )


def enumerate_encoding_points(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    budget: Optional[EnumerationBudget] = None,
) -> list[EncodingPoint]:
    """Exact (L, D) of all M^N deterministic encoders, decoded with Q.

    Encoders are visited in mixed-radix order, last meaning fastest.

    Raises:
        BudgetExceededError: If M^N exceeds the encoder budget.
    """
    budget = budget or EnumerationBudget()
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    _require_budget(
        lang.n_messages**lang.n_meanings, budget.max_encoder_count, "encoders"
    )
    table = phi_table(lang, channel, distortion)
    points = []
    for indices in itertools.product(range(lang.n_messages), repeat=lang.n_meanings):
        point = encoder_point(indices, lang, cost, table)
        points.append(
            EncodingPoint(encoder=indices, cost=point.cost, distortion=point.distortion)
        )
    logger.debug("Encoders enumerated", extra={"count": len(points)})
    return points


def enumeration_hull(
    points: Sequence[EncodingPoint],
) -> tuple[list[DistortionCostPoint], list[DistortionCostPoint]]:
    """Lower and upper envelopes of enumerated encoder points."""
    plotted = [
        DistortionCostPoint(
            cost=point.cost, distortion=point.distortion, encoder=point.encoder
        )
        for point in points
    ]
    return lower_envelope(plotted), upper_envelope(plotted)


def enumerate_decoders(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    budget: Optional[EnumerationBudget] = None,
) -> list[DecodingPoint]:
    """Exact D_{P,V} of all N^M deterministic decoders at the fixed cost L_P.

    Raises:
        BudgetExceededError: If N^M exceeds the decoder budget.
    """
    budget = budget or EnumerationBudget()
    check_dimensions(lang, channel=channel, distortion=distortion)
    _require_budget(
        lang.n_meanings**lang.n_messages, budget.max_decoder_count, "decoders"
    )
    psi = psi_table(lang, channel, distortion).values
    points = [
        DecodingPoint(
            decoder=indices,
            distortion=sum((psi[k][r] for r, k in enumerate(indices)), ZERO),
        )
        for indices in itertools.product(
            range(lang.n_meanings), repeat=lang.n_messages
        )
    ]
    logger.debug("Decoders enumerated", extra={"count": len(points)})
    return points


def global_optimum(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    budget: Optional[EnumerationBudget] = None,
) -> list[DistortionCostPoint]:
    """Lower envelope of jointly optimized deterministic encoder and decoder pairs.

    For every encoder the best decoder is solved per received message,
    argmin over w_hat of sum_w p(w) c(s_hat|s_w) d(w, w_hat), so only the
    M^N encoders are enumerated.

    Args:
        lang: Semantic language.
        channel: Semantic channel.
        distortion: Distortion measure.
        cost: Message costs.
        budget: Enumeration limits; both M^N and N^M must fit.

    Returns:
        list[DistortionCostPoint]: Envelope vertices with encoder and decoder.

    Raises:
        BudgetExceededError: If either count exceeds its budget.
    """
    budget = budget or EnumerationBudget()
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    n_meanings, n_messages = lang.n_meanings, lang.n_messages
    _require_budget(n_messages**n_meanings, budget.max_encoder_count, "encoders")
    _require_budget(n_meanings**n_messages, budget.max_decoder_count, "decoders")
    prior, c, d = lang.tx_prior, channel.kernel, distortion.matrix
    points = []
    for indices in itertools.product(range(n_messages), repeat=n_meanings):
        decoder = []
        total = ZERO
        for r in range(n_messages):
            weights = [prior[n] * c[indices[n]][r] for n in range(n_meanings)]
            losses = [
                sum((weights[n] * d[n][k] for n in range(n_meanings)), ZERO)
                for k in range(n_meanings)
            ]
            best = min(losses)
            decoder.append(losses.index(best))
            total += best
        points.append(
            DistortionCostPoint(
                cost=sum(
                    (prior[n] * cost.costs[m] for n, m in enumerate(indices)), ZERO
                ),
                distortion=total,
                encoder=indices,
                decoder=tuple(decoder),
            )
        )
    envelope = lower_envelope(points)
    logger.debug(
        "Global optimum enumerated",
        extra={"pairs": len(points), "vertices": len(envelope)},
    )
    return envelope


def decoder_extremes(points: Sequence[DecodingPoint]) -> tuple[Fraction, Fraction]:
    """Smallest and largest distortion over enumerated decoders."""
    values = [point.distortion for point in points]
    return min(values), max(values)
