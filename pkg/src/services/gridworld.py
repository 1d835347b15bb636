"""Generator of the grid world semantic language."""

import itertools
from collections import Counter
from fractions import Fraction
from typing import Optional

from ..middleware.exceptions import DomainError
from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    DistortionMeasure,
    GridWorldParams,
    SemanticChannel,
    SemanticLanguage,
    SemanticSystem,
)

UP = "U"
RIGHT = "R"
EMPTY_MESSAGE = "∅"


def _paths_to(cell: tuple[int, int]) -> list[str]:
    """All up/right words from (0, 0) to cell, in generation order."""
    rights, ups = cell
    return [
        "".join(word)
        for word in itertools.product(UP + RIGHT, repeat=rights + ups)
        if word.count(RIGHT) == rights
    ]


def generate_gridworld(params: Optional[GridWorldParams] = None) -> SemanticSystem:
    """Build the grid world language from its destinations and move costs.

    Messages are the up/right words that are a prefix of some path to a
    destination; all other words are illegitimate. q(w|s) is the share of
    paths to w among all destination paths having s as a prefix, and p(s|w)
    is uniform over the messages with q(w|s) > 0. Terminal messages, those
    not a proper prefix of any path, that share cost and interpretation are
    merged into the first one generated. Messages end up sorted by cost.

    Args:
        params: Grid, destinations, costs and priors. The defaults give the
            3 x 3 grid with A at (1, 2) and B at (2, 2).

    Returns:
        SemanticSystem: Language with error-free channel and Hamming distortion.

    Raises:
        DomainError: If a destination lies outside the grid.
    """
    params = params or GridWorldParams()
    for label, (rights, ups) in zip(params.labels, params.destinations):
        if not (0 <= rights < params.side and 0 <= ups < params.side):
            raise DomainError(
                f"Destination {label} is not reachable inside the grid",
                details={"destination": [rights, ups], "side": params.side},
            )

    paths = [_paths_to(cell) for cell in params.destinations]
    every_path = [path for group in paths for path in group]
    longest = max(len(path) for path in every_path)
    words = [
        "".join(word)
        for length in range(longest + 1)
        for word in itertools.product(UP + RIGHT, repeat=length)
        if any(path.startswith("".join(word)) for path in every_path)
    ]

    interpretation = {}
    for word in words:
        counts = [sum(path.startswith(word) for path in group) for group in paths]
        total = sum(counts)
        interpretation[word] = tuple(Fraction(count, total) for count in counts)
    support = [
        sum(1 for word in words if interpretation[word][n] > 0)
        for n in range(len(paths))
    ]

    def cost_of(word: str) -> Fraction:
        return params.up_cost * word.count(UP) + params.right_cost * word.count(RIGHT)

    def is_terminal(word: str) -> bool:
        return not any(
            path.startswith(word) and len(path) > len(word) for path in every_path
        )

    # Terminal words with equal cost and interpretation collapse onto the first.
    representative: dict[str, str] = {}
    first_of_class: dict[tuple, str] = {}
    for word in words:
        key = (cost_of(word), interpretation[word])
        if is_terminal(word) and key in first_of_class:
            representative[word] = first_of_class[key]
            continue
        if is_terminal(word):
            first_of_class[key] = word
        representative[word] = word
    kept = [word for word in words if representative[word] == word]
    merged = Counter(representative[word] for word in words)

    language = SemanticLanguage(
        meanings=params.labels,
        messages=tuple(word or EMPTY_MESSAGE for word in kept),
        expression=tuple(
            tuple(
                Fraction(merged[word], support[n])
                if interpretation[word][n] > 0
                else Fraction(0)
                for word in kept
            )
            for n in range(len(paths))
        ),
        interpretation=tuple(interpretation[word] for word in kept),
        tx_prior=params.tx_prior,
        rx_prior=params.rx_prior,
    )
    logger.debug(
        "Grid world generated",
        extra={
            "legitimate_messages": len(words),
            "messages": len(kept),
            "merged": len(words) - len(kept),
        },
    )
    system = SemanticSystem(
        language=language,
        channel=SemanticChannel.error_free(len(kept)),
        distortion=DistortionMeasure.hamming(len(paths)),
        cost=CostFunction(costs=tuple(cost_of(word) for word in kept)),
    )
    # Stable, so equal costs keep generation order.
    return system.sorted_by_cost()
