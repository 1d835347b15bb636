"""Combined semantic encoding and decoding (CSED)."""

from fractions import Fraction
from typing import Optional, Sequence

from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    CsedMixture,
    CsedRegion,
    DecodingScheme,
    DistortionCostPoint,
    DistortionMeasure,
    EncodingScheme,
    MixtureTerm,
    PriorChoice,
    RegionFrontier,
    SemanticChannel,
    SemanticLanguage,
    StrategyComparison,
    Theorem4Report,
    TieBreakPolicy,
)
from ..models.domain.rational import IndexVector
from .core import (
    ZERO,
    average_cost,
    average_distortion,
    check_dimensions,
    is_self_consistent,
    phi_table,
)
from .decoding import (
    baseline_distortion,
    decoding_region,
    map_decoder,
    psi_table,
)
from .encoding import build_frontier
from .hull import envelope_value, lower_envelope, upper_envelope


def csed_evaluate(
    mixture: CsedMixture,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
) -> DistortionCostPoint:
    """Exact (L, D) of a time-shared encoder used with the mixture's decoder.

    Args:
        mixture: Weights, encoders and the receiver's decoder.
        lang: Semantic language.
        channel: Semantic channel.
        distortion: Distortion measure.
        cost: Message costs.

    Returns:
        DistortionCostPoint: Cost and distortion with the mixture as provenance.
    """
    check_dimensions(
        lang, channel=channel, distortion=distortion, cost=cost, decoder=mixture.decoder
    )
    combined = tuple(
        tuple(
            sum(
                (
                    weight * encoder.matrix[n][m]
                    for weight, encoder in zip(mixture.weights, mixture.encoders)
                ),
                ZERO,
            )
            for m in range(lang.n_messages)
        )
        for n in range(lang.n_meanings)
    )
    encoder = EncodingScheme(matrix=combined)
    terms = tuple(
        MixtureTerm(weight=weight, encoder=scheme.indices)
        for weight, scheme in zip(mixture.weights, mixture.encoders)
        if scheme.is_deterministic and weight
    )
    return DistortionCostPoint(
        cost=average_cost(encoder, lang, cost),
        distortion=average_distortion(
            encoder, mixture.decoder, lang, channel, distortion
        ),
        encoder=encoder.indices,
        decoder=mixture.decoder.indices,
        mixture=terms,
    )


def _redecoded(
    encoders: Sequence[IndexVector],
    prefix: str,
    decoder: DecodingScheme,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
) -> list[DistortionCostPoint]:
    points = []
    for i, indices in enumerate(encoders):
        encoder = EncodingScheme.deterministic(indices, n_messages=lang.n_messages)
        points.append(
            DistortionCostPoint(
                cost=average_cost(encoder, lang, cost),
                distortion=average_distortion(
                    encoder, decoder, lang, channel, distortion
                ),
                encoder=tuple(indices),
                decoder=decoder.indices,
                label=f"{prefix}-{i}",
            )
        )
    return points


def csed_operating_points(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    frontier: Optional[RegionFrontier] = None,
    tie_break: Optional[TieBreakPolicy] = None,
) -> tuple[DistortionCostPoint, ...]:
    """Lower-chain encoders re-decoded with V*_q.

    This is what a transmitter optimizing against Q obtains once the
    receiver switches to its own MAP decoder.
    """
    frontier = frontier or build_frontier(lang, channel, distortion, cost, tie_break)
    decoder = map_decoder(lang, channel, distortion, use_prior=PriorChoice.RX)
    return tuple(
        _redecoded(
            [vertex.encoder for vertex in frontier.lower],
            "lower",
            decoder,
            lang,
            channel,
            distortion,
            cost,
        )
    )


def csed_region(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    tie_break: Optional[TieBreakPolicy] = None,
    frontier: Optional[RegionFrontier] = None,
) -> CsedRegion:
    """Convex hull of every frontier encoder evaluated with V*_q.

    The hull depends on which frontier the tie-break policy produced, so
    the policy is stored with the region.

    Returns:
        CsedRegion: Lower and upper hull chains plus all generating points.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    frontier = frontier or build_frontier(lang, channel, distortion, cost, tie_break)
    decoder = map_decoder(lang, channel, distortion, use_prior=PriorChoice.RX)
    points = _redecoded(
        [vertex.encoder for vertex in frontier.lower],
        "lower",
        decoder,
        lang,
        channel,
        distortion,
        cost,
    ) + _redecoded(
        [vertex.encoder for vertex in frontier.upper],
        "upper",
        decoder,
        lang,
        channel,
        distortion,
        cost,
    )
    lower = lower_envelope(points)
    upper = upper_envelope(points)
    logger.debug(
        "CSED region built",
        extra={
            "points": len(points),
            "lower_vertices": len(lower),
            "upper_vertices": len(upper),
            "tie_break": str(frontier.tie_break),
        },
    )
    return CsedRegion(
        lower=tuple(lower),
        upper=tuple(upper),
        points=tuple(points),
        tie_break=frontier.tie_break,
    )


def csed_distortion_cost_function(region: CsedRegion, cost: Fraction) -> Fraction:
    """Minimum CSED distortion at average cost L, exact.

    Raises:
        DomainError: If L is outside the hull's cost range.
    """
    return envelope_value(region.lower, Fraction(cost))


def _pairwise_disjoint(sets: Sequence[IndexVector]) -> bool:
    union: set[int] = set()
    for members in sets:
        if union & set(members):
            return False
        union |= set(members)
    return True


def _argmin(values: Sequence[Fraction]) -> IndexVector:
    best = min(values)
    return tuple(i for i, value in enumerate(values) if value == best)


def check_theorem4(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    frontier: RegionFrontier,
) -> Theorem4Report:
    """Evaluate the sufficient conditions for CSED to reach the joint optimum.

    The hypotheses (error-free channel, symmetric distortion) are checked and
    reported alongside the four conditions rather than assumed.
    """
    check_dimensions(lang, channel=channel, distortion=distortion)
    table = phi_table(lang, channel, distortion)
    phi_sets = [_argmin(row) for row in table]
    used = tuple(sorted({m for encoder in frontier.encoders for m in encoder}))
    psi = psi_table(lang, channel, distortion, prior=PriorChoice.RX)
    psi_sets = [_argmin(psi.column(m)) for m in used]
    report = Theorem4Report(
        error_free=channel.is_error_free,
        symmetric=distortion.is_symmetric,
        priors_equal=lang.tx_prior == lang.rx_prior,
        self_consistent=is_self_consistent(lang),
        phi_argmin_disjoint=_pairwise_disjoint(phi_sets),
        psi_argmin_disjoint=_pairwise_disjoint(psi_sets),
        used_messages=used,
    )
    logger.debug("Theorem 4 conditions checked", extra={"verdict": report.verdict})
    return report


def compare_strategies(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    tie_break: Optional[TieBreakPolicy] = None,
) -> StrategyComparison:
    """Evaluate semantic encoding, semantic decoding and CSED side by side.

    CSED is judged on its operating points, the lower-chain encoders decoded
    with V*_q. Whether CSED beats decoding is read off the hull at L_P and
    left undecided when L_P falls outside it.
    """
    frontier = build_frontier(lang, channel, distortion, cost, tie_break)
    decoding = decoding_region(lang, channel, distortion, cost)
    region = csed_region(lang, channel, distortion, cost, frontier=frontier)
    operating = csed_operating_points(
        lang, channel, distortion, cost, frontier=frontier
    )
    encoding_lower = frontier.lower_points

    below = above = False
    for point in operating:
        floor = envelope_value(encoding_lower, point.cost)
        below = below or point.distortion < floor
        above = above or point.distortion > floor

    beats_decoding: Optional[bool] = None
    if region.lower[0].cost <= decoding.cost <= region.lower[-1].cost:
        beats_decoding = (
            envelope_value(region.lower, decoding.cost) < decoding.lower.distortion
        )

    return StrategyComparison(
        encoding_lower=encoding_lower,
        encoding_upper=frontier.upper_points,
        decoding=decoding,
        baseline=DistortionCostPoint(
            cost=decoding.cost,
            distortion=baseline_distortion(lang, channel, distortion),
            label="baseline",
        ),
        csed_lower=region.lower,
        csed_operating=operating,
        encoding_min=min(point.distortion for point in encoding_lower),
        decoding_min=decoding.lower.distortion,
        csed_operating_min=min(point.distortion for point in operating),
        csed_beats_encoding=below,
        csed_loses_to_encoding=above,
        csed_beats_decoding=beats_decoding,
        tie_break=frontier.tie_break,
    )
