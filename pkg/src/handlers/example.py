"""Handler for `example gridworld|nodshake [--out <path>]`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CommandOutput, ExampleRequest
from ..repositories.language import LanguageRepository
from ..services.gridworld import generate_gridworld
from ..services.nodshake import generate_nodshake


def handle_example(
    request: ExampleRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `example` requests.

    Prints the generated spec, or writes it when --out is given.

    Args:
        request: Parsed arguments
        config: Application configuration
        repository: Serializer of semantic systems

    Returns:
        CommandOutput with the spec text or the written path

    Raises:
        ExportError: If the output file cannot be written
    """
    generate = {"gridworld": generate_gridworld, "nodshake": generate_nodshake}
    system = generate[request.name]()
    logger.info(
        "Example generated",
        extra={"example": request.name, "messages": system.language.n_messages},
    )
    if request.out is None:
        return CommandOutput(text=repository.dumps(system).rstrip("\n"))
    repository.save(system, request.out)
    return CommandOutput(text=f"wrote {request.name} to {request.out}")
