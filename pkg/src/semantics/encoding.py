"""Distortion-cost region of semantic encoding."""

import itertools
import operator
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..middleware.exceptions import DomainError
from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    CriticalPoints,
    DistortionCostPoint,
    DistortionMeasure,
    EncodingScheme,
    FrontierStep,
    FrontierVertex,
    MixtureTerm,
    RegionFrontier,
    SemanticChannel,
    SemanticLanguage,
    SixSubsets,
    TieBreakPolicy,
)
from ..models.domain.rational import IndexVector, Matrix
from .core import ZERO, check_dimensions, phi_table
from .hull import envelope_contains, envelope_value


def _dominant_chain(
    costs: Sequence[Fraction],
    values: Sequence[Fraction],
    from_cheapest: bool,
    prefer_low: bool,
) -> IndexVector:
    """Pareto chain of (cost, value) pairs swept from one cost end.

    Within a cost level the best value wins, the lowest index on exact ties.
    """
    best_at_cost: dict[Fraction, int] = {}
    for index, level in enumerate(costs):
        current = best_at_cost.get(level)
        if current is None:
            best_at_cost[level] = index
        elif prefer_low and values[index] < values[current]:
            best_at_cost[level] = index
        elif not prefer_low and values[index] > values[current]:
            best_at_cost[level] = index

    kept: list[int] = []
    record: Optional[Fraction] = None
    for level in sorted(best_at_cost, reverse=not from_cheapest):
        index = best_at_cost[level]
        value = values[index]
        if record is None or (value < record if prefer_low else value > record):
            kept.append(index)
            record = value
    return tuple(sorted(kept))


def _subsets_from_row(
    w: int, costs: Sequence[Fraction], row: Sequence[Fraction]
) -> SixSubsets:
    lower_left = _dominant_chain(costs, row, from_cheapest=True, prefer_low=True)
    lower_right = _dominant_chain(costs, row, from_cheapest=False, prefer_low=True)
    upper_left = _dominant_chain(costs, row, from_cheapest=True, prefer_low=False)
    upper_right = _dominant_chain(costs, row, from_cheapest=False, prefer_low=False)
    return SixSubsets(
        meaning=w,
        lower_left=lower_left,
        lower_right=lower_right,
        lower=tuple(sorted(set(lower_left) | set(lower_right))),
        upper_left=upper_left,
        upper_right=upper_right,
        upper=tuple(sorted(set(upper_left) | set(upper_right))),
    )


def six_subsets(
    w: int,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    table: Optional[Matrix] = None,
) -> SixSubsets:
    """Minimal Pareto-dominant message subsets of meaning w over (cost, phi).

    Args:
        w: Meaning index.
        lang: Semantic language with cost-sorted messages.
        channel: Semantic channel.
        distortion: Distortion measure.
        cost: Message costs.
        table: Precomputed phi table.

    Returns:
        SixSubsets: The four primed sets and their two unions.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    values = table if table is not None else phi_table(lang, channel, distortion)
    return _subsets_from_row(w, cost.costs, values[w])


def six_subsets_sweep(
    w: int,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    table: Optional[Matrix] = None,
) -> SixSubsets:
    """Two-pointer sweep discovering the six subsets in one pass over S.

    Runs four pointers at once, two from the cheapest and two from the
    dearest message. Upper sets compare in the opposite direction to the
    lower ones, and equal (cost, phi) pairs keep the lower index.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    values = (table if table is not None else phi_table(lang, channel, distortion))[w]
    costs = cost.costs
    size = len(costs)

    def sweep(
        order: Sequence[int], worse: Callable[[Fraction, Fraction], bool]
    ) -> IndexVector:
        kept = set(range(size))
        pointer = order[0]
        for index in order[1:]:
            same_cost = costs[pointer] == costs[index]
            tie = values[pointer] == values[index]
            if (worse(values[pointer], values[index]) or tie) and not (
                tie and same_cost and index < pointer
            ):
                kept.discard(index)
            elif same_cost:
                kept.discard(pointer)
                pointer = index
            else:
                pointer = index
        return tuple(sorted(kept))

    ascending = list(range(size))
    descending = ascending[::-1]
    lower_left = sweep(ascending, operator.lt)
    lower_right = sweep(descending, operator.lt)
    upper_left = sweep(ascending, operator.gt)
    upper_right = sweep(descending, operator.gt)
    return SixSubsets(
        meaning=w,
        lower_left=lower_left,
        lower_right=lower_right,
        lower=tuple(sorted(set(lower_left) | set(lower_right))),
        upper_left=upper_left,
        upper_right=upper_right,
        upper=tuple(sorted(set(upper_left) | set(upper_right))),
    )


def slope_G(
    w: int,
    s: int,
    s_prime: int,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    table: Optional[Matrix] = None,
) -> Fraction:
    """Secant slope (phi(w, s') - phi(w, s)) / (l(s') - l(s)).

    Raises:
        DomainError: If the two messages cost the same.
    """
    if cost.costs[s] == cost.costs[s_prime]:
        raise DomainError(
            "Slope undefined for messages of equal cost",
            details={"s": s, "s_prime": s_prime, "cost": str(cost.costs[s])},
        )
    values = table if table is not None else phi_table(lang, channel, distortion)
    return (values[w][s_prime] - values[w][s]) / (cost.costs[s_prime] - cost.costs[s])


def encoder_point(
    indices: IndexVector,
    lang: SemanticLanguage,
    cost: CostFunction,
    table: Matrix,
    label: Optional[str] = None,
) -> DistortionCostPoint:
    """(L, D) of the deterministic encoder sending meaning n to message indices[n]."""
    prior = lang.tx_prior
    return DistortionCostPoint(
        cost=sum((prior[n] * cost.costs[m] for n, m in enumerate(indices)), ZERO),
        distortion=sum((prior[n] * table[n][m] for n, m in enumerate(indices)), ZERO),
        encoder=tuple(indices),
        label=label,
    )


def _walk(
    members: Sequence[IndexVector],
    lang: SemanticLanguage,
    cost: CostFunction,
    table: Matrix,
    steepest: Callable[[Sequence[Fraction]], Fraction],
    select: Callable,
) -> tuple[FrontierVertex, ...]:
    position = [subset[0] for subset in members]
    vertices = [
        FrontierVertex(
            point=encoder_point(position, lang, cost, table), encoder=tuple(position)
        )
    ]
    while vertices[-1].point.cost < cost.l_max:
        candidates = [
            (
                (table[n][m] - table[n][position[n]])
                / (cost.costs[m] - cost.costs[position[n]]),
                n,
                m,
            )
            for n, subset in enumerate(members)
            if lang.tx_prior[n] > 0
            for m in subset
            if m > position[n]
        ]
        if not candidates:
            break
        target = steepest([slope for slope, _, _ in candidates])
        n, m = select([(n, m) for slope, n, m in candidates if slope == target])
        step = FrontierStep(meaning=n, source=position[n], target=m, slope=target)
        position[n] = m
        vertices.append(
            FrontierVertex(
                point=encoder_point(position, lang, cost, table),
                encoder=tuple(position),
                step=step,
            )
        )
    return tuple(vertices)


def build_frontier(
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
    tie_break: Optional[TieBreakPolicy] = None,
) -> RegionFrontier:
    """Greedy construction of the lower and upper boundaries of the encoding region.

    Starting from every meaning on the least-index member of its subset, each
    step moves one meaning to a dearer message of its subset along the
    steepest descent (lower) or ascent (upper) of phi per unit cost, until
    the average cost reaches the largest message cost.

    Args:
        lang: Semantic language with cost-sorted messages.
        channel: Semantic channel.
        distortion: Distortion measure.
        cost: Message costs.
        tie_break: Rule for equal slopes, lexicographic by default.

    Returns:
        RegionFrontier: Both chains with their deterministic encoders.
    """
    check_dimensions(lang, channel=channel, distortion=distortion, cost=cost)
    policy = tie_break or TieBreakPolicy()
    table = phi_table(lang, channel, distortion)
    subsets = tuple(
        _subsets_from_row(n, cost.costs, table[n]) for n in range(lang.n_meanings)
    )
    lower = _walk(
        [subset.lower for subset in subsets], lang, cost, table, min, policy.selector()
    )
    upper = _walk(
        [subset.upper for subset in subsets], lang, cost, table, max, policy.selector()
    )
    logger.debug(
        "Encoding frontier built",
        extra={
            "lower_vertices": len(lower),
            "upper_vertices": len(upper),
            "tie_break": str(policy),
        },
    )
    return RegionFrontier(lower=lower, upper=upper, subsets=subsets, tie_break=policy)


def critical_points(
    frontier: RegionFrontier,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
) -> CriticalPoints:
    """The eight extreme points of the encoding region.

    Each point is achieved by the deterministic encoder taking, for every
    meaning, the first or last member of one primed subset: lower-1 the
    cheapest lower-left message, lower-2 the dearest lower-left, lower-3 the
    cheapest lower-right and lower-4 the dearest lower-right; the upper
    points likewise over the upper sets.
    """
    table = phi_table(lang, channel, distortion)
    subsets = frontier.subsets

    def points(left: str, right: str, prefix: str) -> tuple[DistortionCostPoint, ...]:
        picks = (
            [getattr(s, left)[0] for s in subsets],
            [getattr(s, left)[-1] for s in subsets],
            [getattr(s, right)[0] for s in subsets],
            [getattr(s, right)[-1] for s in subsets],
        )
        return tuple(
            encoder_point(tuple(pick), lang, cost, table, label=f"{prefix}-{i + 1}")
            for i, pick in enumerate(picks)
        )

    return CriticalPoints(
        lower=points("lower_left", "lower_right", "lower"),
        upper=points("upper_left", "upper_right", "upper"),
    )


def distortion_cost_function(frontier: RegionFrontier, cost: Fraction) -> Fraction:
    """Minimum achievable distortion at average cost L, exact.

    Raises:
        DomainError: If L is outside the frontier's cost range.
    """
    return envelope_value(frontier.lower_points, Fraction(cost))


def region_contains(frontier: RegionFrontier, point: DistortionCostPoint) -> bool:
    """True iff the point lies inside or on the encoding region."""
    return envelope_contains(
        frontier.lower_points, frontier.upper_points, point.cost, point.distortion
    )


def time_share_decompose(encoder: EncodingScheme) -> list[MixtureTerm]:
    """Write a stochastic encoder as a product-form mixture of deterministic ones.

    The weight of the deterministic encoder (i_1..i_N) is the product of
    u(s_{i_n}|w_n), so cost and distortion, being linear in each row, are
    reproduced exactly.
    """
    supports = [
        [m for m, value in enumerate(row) if value > 0] for row in encoder.matrix
    ]
    terms = []
    for indices in itertools.product(*supports):
        weight = Fraction(1)
        for n, m in enumerate(indices):
            weight *= encoder.matrix[n][m]
        terms.append(MixtureTerm(weight=weight, encoder=tuple(indices)))
    return terms
