"""Handler for `check self-consistency|hamming-opt|theorem4 <spec>`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CheckRequest, CommandOutput
from ..models.domain import SemanticSystem
from ..repositories.language import LanguageRepository
from ..semantics import (
    build_frontier,
    check_self_consistency,
    check_theorem4,
    hamming_optimality_check,
)
from ..utils.formatting import exact, message_set, yes_no


def _self_consistency(system: SemanticSystem, places: int) -> tuple[bool, list[str]]:
    lang = system.language
    report = check_self_consistency(lang)
    lines = [f"self-consistent: {yes_no(report.consistent)}"]
    if not report.consistent:
        lines.append(
            f"counterexample: ({lang.meanings[report.meaning]},"
            f" {lang.messages[report.message]})"
            f" posterior {exact(report.expected, places)}"
            f" vs q(w|s) {exact(report.actual, places)}"
        )
    if report.vacuous:
        lines.append(f"never sent: {message_set(lang, report.vacuous)}")
    return report.consistent, lines


def _hamming_optimality(system: SemanticSystem, places: int) -> tuple[bool, list[str]]:
    lang = system.language
    report = hamming_optimality_check(lang, system.channel, system.distortion)
    lines = [f"V*_q optimal: {yes_no(report.optimal)}"]
    for item in report.violations:
        rx = ",".join(lang.meanings[n] for n in item.rx_argmax)
        tx = ",".join(lang.meanings[n] for n in item.tx_argmax)
        lines.append(
            f"violated at {lang.messages[item.message]}:"
            f" rx argmax {rx} not within tx argmax {tx}"
        )
    return report.optimal, lines


def _theorem4(system: SemanticSystem, places: int) -> tuple[bool, list[str]]:
    lang = system.language
    frontier = build_frontier(lang, system.channel, system.distortion, system.cost)
    report = check_theorem4(lang, system.channel, system.distortion, frontier)
    lines = [
        f"error-free channel: {yes_no(report.error_free)}",
        f"symmetric distortion: {yes_no(report.symmetric)}",
        f"1. priors equal: {yes_no(report.priors_equal)}",
        f"2. self-consistent: {yes_no(report.self_consistent)}",
        f"3. phi argmin sets disjoint: {yes_no(report.phi_argmin_disjoint)}",
        f"4. psi argmin sets disjoint: {yes_no(report.psi_argmin_disjoint)}",
        f"used messages: {message_set(lang, report.used_messages)}",
        f"verdict: {'satisfied' if report.verdict else 'violated'}",
    ]
    return report.verdict, lines


def handle_check(
    request: CheckRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `check` requests.

    A failed condition is a result, not an error: the command exits 0 and
    reports which condition failed.

    Args:
        request: Parsed arguments
        config: Application configuration
        repository: Source of semantic systems

    Returns:
        CommandOutput with the verdict and its evidence

    Raises:
        NonHammingDistortionError: For hamming-opt on a non-Hamming distortion
    """
    system = repository.load(request.spec)
    run = {
        "self-consistency": _self_consistency,
        "hamming-opt": _hamming_optimality,
        "theorem4": _theorem4,
    }[request.kind]
    verdict, lines = run(system, config.decimal_places)
    logger.info("Check evaluated", extra={"kind": request.kind, "verdict": verdict})
    return CommandOutput(text="\n".join(lines))
