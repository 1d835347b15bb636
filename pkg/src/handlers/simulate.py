"""Handler for `simulate <spec> --scheme <name> --trials <n> --seed <n>`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CommandOutput, SimulateRequest
from ..models.domain import SimulationConfig
from ..repositories.language import LanguageRepository
from ..semantics import average_cost, average_distortion, simulate
from ..services.schemes import SchemeResolver
from ..utils.formatting import exact, render_table


def handle_simulate(
    request: SimulateRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `simulate` requests.

    Runs seeded one-shot transmissions of a named scheme pair and sets the
    sample means next to the exact values they estimate.

    Args:
        request: Parsed arguments
        config: Application configuration, supplying block size and workers
        repository: Source of semantic systems

    Returns:
        CommandOutput with estimates, standard errors and exact values

    Raises:
        InvalidSchemeError: If the scheme name is unknown
    """
    system = repository.load(request.spec)
    lang = system.language
    places = config.decimal_places
    encoder, decoder = SchemeResolver(system).resolve(request.scheme)
    result = simulate(
        SimulationConfig(
            trials=request.trials,
            seed=request.seed,
            encoder=encoder,
            decoder=decoder,
            block_size=config.simulation_block_size,
            workers=config.simulation_workers,
        ),
        lang,
        system.channel,
        system.distortion,
        system.cost,
    )
    expected_cost = average_cost(encoder, lang, system.cost)
    expected_distortion = average_distortion(
        encoder, decoder, lang, system.channel, system.distortion
    )
    rows = [
        [
            "L",
            exact(result.cost, places),
            f"{result.cost_stderr:.{places}g}",
            exact(expected_cost, places),
        ],
        [
            "D",
            exact(result.distortion, places),
            f"{result.distortion_stderr:.{places}g}",
            exact(expected_distortion, places),
        ],
    ]
    frequency = [
        [message, exact(value, places)]
        for message, value in zip(lang.messages, result.message_frequency)
    ]
    lines = [
        f"scheme: {request.scheme}",
        f"trials: {result.trials}",
        f"seed: {request.seed}",
        render_table(["quantity", "estimate", "stderr", "exact"], rows),
        "received messages",
        render_table(["message", "frequency"], frequency),
    ]
    logger.info(
        "Simulation reported",
        extra={"scheme": request.scheme, "trials": result.trials},
    )
    return CommandOutput(text="\n".join(lines))
