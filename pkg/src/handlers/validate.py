"""Handler for `validate <spec>`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CommandOutput, ValidateRequest
from ..repositories.language import LanguageRepository
from ..semantics import check_self_consistency
from ..utils.formatting import yes_no


def handle_validate(
    request: ValidateRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `validate` requests.

    Loading already runs validate_system, so a broken spec surfaces as
    InvalidLanguageError with every issue in its details.

    Args:
        request: Parsed arguments
        config: Application configuration
        repository: Source of semantic systems

    Returns:
        CommandOutput with a summary of the valid system

    Raises:
        SpecParseError: If the spec file is malformed
        InvalidLanguageError: If the system violates its invariants
    """
    system = repository.load(request.spec)
    lang = system.language
    consistency = check_self_consistency(lang)
    logger.info(
        "Spec validated",
        extra={"meanings": lang.n_meanings, "messages": lang.n_messages},
    )
    lines = [
        f"valid: {request.spec}",
        f"meanings: {lang.n_meanings} ({', '.join(lang.meanings)})",
        f"messages: {lang.n_messages} ({', '.join(lang.messages)})",
        f"shared prior: {yes_no(lang.tx_prior == lang.rx_prior)}",
        f"self-consistent: {yes_no(consistency.consistent)}",
        f"error-free channel: {yes_no(system.channel.is_error_free)}",
        f"hamming distortion: {yes_no(system.distortion.is_hamming)}",
    ]
    return CommandOutput(text="\n".join(lines))
