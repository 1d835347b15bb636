"""Handler for `region enc|dec|csed <spec>`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CommandOutput, RegionRequest
from ..models.domain import (
    DistortionCostPoint,
    RegionFrontier,
    SemanticSystem,
    TieBreakPolicy,
)
from ..repositories.language import LanguageRepository
from ..repositories.region_csv import export_region_csv
from ..semantics import (
    baseline_distortion,
    build_frontier,
    csed_operating_points,
    csed_region,
    decoding_region,
)
from ..utils.formatting import (
    decoder_map,
    exact,
    message_set,
    point_rows,
    render_table,
)

RegionOutput = tuple[list[str], list[DistortionCostPoint], list[str]]


def _subset_lines(frontier: RegionFrontier, system: SemanticSystem) -> list[str]:
    lang = system.language
    rows = [
        [
            lang.meanings[subsets.meaning],
            message_set(lang, subsets.lower),
            message_set(lang, subsets.upper),
        ]
        for subsets in frontier.subsets
    ]
    return ["six subsets", render_table(["meaning", "lower", "upper"], rows)]


def _chain_lines(
    name: str, frontier: RegionFrontier, system: SemanticSystem, places: int
) -> list[str]:
    lang = system.language
    rows = []
    for i, vertex in enumerate(getattr(frontier, name)):
        step = vertex.step
        move = (
            f"{lang.meanings[step.meaning]}: {lang.messages[step.source]}"
            f" -> {lang.messages[step.target]} @ {exact(step.slope, places)}"
            if step
            else "start"
        )
        rows.append(
            [
                f"{name}:{i}",
                message_set(lang, vertex.encoder),
                exact(vertex.point.cost, places),
                exact(vertex.point.distortion, places),
                move,
            ]
        )
    headers = ["vertex", "scheme", "L", "D", "move"]
    return [f"{name} frontier", render_table(headers, rows)]


def _encoding(
    request: RegionRequest, system: SemanticSystem, places: int
) -> RegionOutput:
    frontier = build_frontier(
        system.language,
        system.channel,
        system.distortion,
        system.cost,
        TieBreakPolicy.parse(request.tie_break),
    )
    lines = [f"tie-break: {frontier.tie_break}"]
    lines += _subset_lines(frontier, system)
    lines += _chain_lines("lower", frontier, system, places)
    lines += _chain_lines("upper", frontier, system, places)
    points = list(frontier.lower_points + frontier.upper_points)
    schemes = [
        f"{name}:{i} {message_set(system.language, vertex.encoder)}"
        for name in ("lower", "upper")
        for i, vertex in enumerate(getattr(frontier, name))
    ]
    return lines, points, schemes


def _decoding(
    request: RegionRequest, system: SemanticSystem, places: int
) -> RegionOutput:
    lang = system.language
    region = decoding_region(lang, system.channel, system.distortion, system.cost)
    baseline = baseline_distortion(lang, system.channel, system.distortion)
    lines = [
        f"L_P: {exact(region.cost, places)}",
        f"D_lo: {exact(region.lower.distortion, places)}",
        f"  decoder: {decoder_map(lang, region.lower.decoder)}",
        f"D_hi: {exact(region.upper.distortion, places)}",
        f"  decoder: {decoder_map(lang, region.upper.decoder)}",
        f"D_P,Q: {exact(baseline, places)}",
    ]
    points = [region.lower, region.upper]
    schemes = [
        f"{point.label} {decoder_map(lang, point.decoder)}" for point in points
    ]
    return lines, points, schemes


def _csed(
    request: RegionRequest, system: SemanticSystem, places: int
) -> RegionOutput:
    lang = system.language
    frontier = build_frontier(
        lang,
        system.channel,
        system.distortion,
        system.cost,
        TieBreakPolicy.parse(request.tie_break),
    )
    region = csed_region(
        lang, system.channel, system.distortion, system.cost, frontier=frontier
    )
    operating = csed_operating_points(
        lang, system.channel, system.distortion, system.cost, frontier=frontier
    )
    headers = ["point", "scheme", "L", "D"]
    lines = [
        f"tie-break: {region.tie_break}",
        f"decoder V*_q: {decoder_map(lang, region.points[0].decoder)}",
        "lower hull",
        render_table(headers, point_rows(region.lower, lang, places)),
        "upper hull",
        render_table(headers, point_rows(region.upper, lang, places)),
        "operating points",
        render_table(headers, point_rows(operating, lang, places)),
    ]
    points = list(region.lower + region.upper)
    schemes = [
        f"{point.label} {message_set(lang, point.encoder)}" for point in points
    ]
    return lines, points, schemes


def handle_region(
    request: RegionRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `region` requests.

    Prints the encoding frontier, the decoding segment or the CSED hull and
    optionally exports its vertices as CSV, lower chain first.

    Args:
        request: Parsed arguments
        config: Application configuration
        repository: Source of semantic systems

    Returns:
        CommandOutput with the region tables
    """
    system = repository.load(request.spec)
    build = {"enc": _encoding, "dec": _decoding, "csed": _csed}[request.kind]
    lines, points, schemes = build(request, system, config.decimal_places)
    if request.csv is not None:
        export_region_csv(points, request.csv, schemes)
        lines.append(f"wrote {len(points)} rows to {request.csv}")
    logger.info("Region computed", extra={"kind": request.kind, "points": len(points)})
    return CommandOutput(text="\n".join(lines))
