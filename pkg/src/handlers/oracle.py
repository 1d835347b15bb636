"""Handler for `oracle frontier|decoders|global <spec> [--budget <n>]`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CommandOutput, OracleRequest
from ..models.domain import EnumerationBudget
from ..repositories.language import LanguageRepository
from ..semantics import (
    decoder_extremes,
    enumerate_decoders,
    enumerate_encoding_points,
    enumeration_hull,
    global_optimum,
)
from ..utils.formatting import decoder_map, exact, point_rows, render_table


def handle_oracle(
    request: OracleRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `oracle` requests by brute-force enumeration.

    Args:
        request: Parsed arguments; --budget overrides both configured limits
        config: Application configuration
        repository: Source of semantic systems

    Returns:
        CommandOutput with the enumerated envelopes or extremes

    Raises:
        BudgetExceededError: If the enumeration is larger than the budget
    """
    system = repository.load(request.spec)
    lang, channel, distortion = system.language, system.channel, system.distortion
    places = config.decimal_places
    budget = (
        EnumerationBudget(
            max_encoder_count=request.budget, max_decoder_count=request.budget
        )
        if request.budget is not None
        else config.budget()
    )
    headers = ["point", "scheme", "L", "D"]

    if request.kind == "frontier":
        points = enumerate_encoding_points(
            lang, channel, distortion, system.cost, budget
        )
        lower, upper = enumeration_hull(points)
        lines = [
            f"encoders: {len(points)}",
            "lower hull",
            render_table(headers, point_rows(lower, lang, places)),
            "upper hull",
            render_table(headers, point_rows(upper, lang, places)),
        ]
    elif request.kind == "decoders":
        decoders = enumerate_decoders(lang, channel, distortion, budget)
        low, high = decoder_extremes(decoders)
        lines = [
            f"decoders: {len(decoders)}",
            f"D min: {exact(low, places)}",
            f"D max: {exact(high, places)}",
        ]
    else:
        envelope = global_optimum(lang, channel, distortion, system.cost, budget)
        rows = [
            row + [decoder_map(lang, point.decoder)]
            for row, point in zip(point_rows(envelope, lang, places), envelope)
        ]
        lines = ["joint optimum", render_table(headers + ["decoder"], rows)]

    logger.info("Oracle enumerated", extra={"kind": request.kind})
    return CommandOutput(text="\n".join(lines))
