"""Exact piecewise-linear envelopes of (L, D) point sets."""

from fractions import Fraction
from typing import Sequence

from ..middleware.exceptions import DomainError
from ..models.domain import DistortionCostPoint


def _turn(
    a: DistortionCostPoint, b: DistortionCostPoint, c: DistortionCostPoint
) -> Fraction:
    """Cross product of (b - a) and (c - a); positive for a left turn."""
    return (b.cost - a.cost) * (c.distortion - a.distortion) - (
        c.cost - a.cost
    ) * (b.distortion - a.distortion)


def _extreme_per_cost(
    points: Sequence[DistortionCostPoint], lowest: bool
) -> list[DistortionCostPoint]:
    best: dict[Fraction, DistortionCostPoint] = {}
    for point in points:
        current = best.get(point.cost)
        if current is None:
            best[point.cost] = point
        elif lowest and point.distortion < current.distortion:
            best[point.cost] = point
        elif not lowest and point.distortion > current.distortion:
            best[point.cost] = point
    return [best[cost] for cost in sorted(best)]


def lower_envelope(points: Sequence[DistortionCostPoint]) -> list[DistortionCostPoint]:
    """Vertices of the lower convex envelope, increasing cost, collinear points dropped.

    For equal (L, D) the first point in input order is kept, so provenance
    follows the caller's order.
    """
    chain: list[DistortionCostPoint] = []
    for point in _extreme_per_cost(points, lowest=True):
        while len(chain) > 1 and _turn(chain[-2], chain[-1], point) <= 0:
            chain.pop()
        chain.append(point)
    return chain


def upper_envelope(points: Sequence[DistortionCostPoint]) -> list[DistortionCostPoint]:
    """Vertices of the upper concave envelope, increasing cost, no collinear points."""
    chain: list[DistortionCostPoint] = []
    for point in _extreme_per_cost(points, lowest=False):
        while len(chain) > 1 and _turn(chain[-2], chain[-1], point) >= 0:
            chain.pop()
        chain.append(point)
    return chain


def envelope_value(chain: Sequence[DistortionCostPoint], cost: Fraction) -> Fraction:
    """Exact linear interpolation of a chain at the given cost.

    Raises:
        DomainError: If cost lies outside the chain's cost range.
    """
    if not chain or not chain[0].cost <= cost <= chain[-1].cost:
        raise DomainError(
            "Cost outside the achievable range",
            details={
                "cost": str(cost),
                "range": [str(chain[0].cost), str(chain[-1].cost)] if chain else [],
            },
        )
    for left, right in zip(chain, chain[1:]):
        if left.cost <= cost <= right.cost:
            if cost == left.cost:
                return left.distortion
            ratio = (cost - left.cost) / (right.cost - left.cost)
            return left.distortion + ratio * (right.distortion - left.distortion)
    return chain[0].distortion


def chain_slopes(chain: Sequence[DistortionCostPoint]) -> list[Fraction]:
    """Slopes of consecutive segments of a chain with increasing cost."""
    return [
        (b.distortion - a.distortion) / (b.cost - a.cost)
        for a, b in zip(chain, chain[1:])
        if b.cost != a.cost
    ]


def envelope_contains(
    lower: Sequence[DistortionCostPoint],
    upper: Sequence[DistortionCostPoint],
    cost: Fraction,
    distortion: Fraction,
) -> bool:
    """True iff (cost, distortion) lies between the two envelopes."""
    if not lower[0].cost <= cost <= lower[-1].cost:
        return False
    return envelope_value(lower, cost) <= distortion <= envelope_value(upper, cost)


def normalize_chain(
    chain: Sequence[DistortionCostPoint], lower: bool = True
) -> list[DistortionCostPoint]:
    """Drop duplicate and collinear vertices of a convex or concave chain."""
    return lower_envelope(chain) if lower else upper_envelope(chain)
