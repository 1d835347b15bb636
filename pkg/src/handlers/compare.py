"""Handler for `compare <spec>`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CommandOutput, CompareRequest
from ..models.domain import TieBreakPolicy
from ..repositories.language import LanguageRepository
from ..semantics import compare_strategies
from ..utils.formatting import exact, point_rows, render_table, yes_no


def handle_compare(
    request: CompareRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `compare` requests.

    Puts semantic encoding, semantic decoding and CSED side by side. The
    CSED figure is the best operating point, an encoder the transmitter
    optimized against Q used with the receiver's V*_q.

    Args:
        request: Parsed arguments
        config: Application configuration
        repository: Source of semantic systems

    Returns:
        CommandOutput with the minimum distortion of each strategy
    """
    system = repository.load(request.spec)
    lang = system.language
    places = config.decimal_places
    comparison = compare_strategies(
        lang,
        system.channel,
        system.distortion,
        system.cost,
        TieBreakPolicy.parse(request.tie_break),
    )
    summary = [
        ["encoding", exact(comparison.encoding_min, places)],
        ["decoding", exact(comparison.decoding_min, places)],
        ["language (P, Q)", exact(comparison.baseline.distortion, places)],
        ["CSED", exact(comparison.csed_operating_min, places)],
    ]
    lines = [
        render_table(["strategy", "min D"], summary),
        f"CSED below encoding somewhere: {yes_no(comparison.csed_beats_encoding)}",
        f"CSED above encoding somewhere: {yes_no(comparison.csed_loses_to_encoding)}",
        f"CSED hull below D_lo at L_P: {yes_no(comparison.csed_beats_decoding)}",
        "CSED operating points",
        render_table(
            ["point", "scheme", "L", "D"],
            point_rows(comparison.csed_operating, lang, places),
        ),
    ]
    logger.info(
        "Strategies compared",
        extra={
            "encoding_min": str(comparison.encoding_min),
            "decoding_min": str(comparison.decoding_min),
            "csed_min": str(comparison.csed_operating_min),
        },
    )
    return CommandOutput(text="\n".join(lines))
