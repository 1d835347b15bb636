import argparse
import sys
from typing import Any, Callable, Optional, Sequence

from pydantic import BaseModel, ValidationError

from src.config.app import AppConfig
from src.handlers import (
    handle_check,
    handle_compare,
    handle_decode,
    handle_example,
    handle_oracle,
    handle_region,
    handle_simulate,
    handle_validate,
)
from src.middleware.error_handler import error_handler_middleware
from src.middleware.exceptions import UsageError
from src.middleware.logging import logger, logging_middleware
from src.models.cli import (
    CheckRequest,
    CommandOutput,
    CompareRequest,
    DecodeRequest,
    ExampleRequest,
    OracleRequest,
    RegionRequest,
    SimulateRequest,
    ValidateRequest,
    VersionResponse,
)
from src.repositories.spec_file import SpecFileLanguageRepository
from src.semantics import __version__

# --- Command Table ---
Handler = Callable[[Any, AppConfig, SpecFileLanguageRepository], CommandOutput]

COMMANDS: dict[str, tuple[type[BaseModel], Handler]] = {
    "validate": (ValidateRequest, handle_validate),
    "region": (RegionRequest, handle_region),
    "decode": (DecodeRequest, handle_decode),
    "check": (CheckRequest, handle_check),
    "compare": (CompareRequest, handle_compare),
    "oracle": (OracleRequest, handle_oracle),
    "simulate": (SimulateRequest, handle_simulate),
    "example": (ExampleRequest, handle_example),
}


class CommandLineParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> None:
        raise UsageError(message, details={"usage": self.format_usage().strip()})


def build_parser() -> argparse.ArgumentParser:
    """Parser for every subcommand."""
    parser = CommandLineParser(
        prog="semcomm",
        description="Exact distortion-cost analysis of semantic languages.",
    )
    parser.add_argument("--version", action="store_true", help="Print the version")
    commands = parser.add_subparsers(dest="command", metavar="command")

    validate = commands.add_parser("validate", help="Validate a spec file")
    validate.add_argument("spec")

    region = commands.add_parser("region", help="Print a distortion-cost region")
    region.add_argument("kind", choices=["enc", "dec", "csed"])
    region.add_argument("spec")
    region.add_argument("--tie-break", dest="tie_break")
    region.add_argument("--csv", help="Export the region vertices as CSV")

    decode = commands.add_parser("decode", help="Build a decoder for the language")
    decode.add_argument("spec")
    decode.add_argument("--prior", choices=["tx", "rx"])
    decode.add_argument("--refine", action="store_true", default=None)

    check = commands.add_parser("check", help="Check a condition on the language")
    check.add_argument("kind", choices=["self-consistency", "hamming-opt", "theorem4"])
    check.add_argument("spec")

    compare = commands.add_parser("compare", help="Compare all three strategies")
    compare.add_argument("spec")
    compare.add_argument("--tie-break", dest="tie_break")

    oracle = commands.add_parser("oracle", help="Brute-force enumeration")
    oracle.add_argument("kind", choices=["frontier", "decoders", "global"])
    oracle.add_argument("spec")
    oracle.add_argument("--budget", type=int)

    simulate = commands.add_parser("simulate", help="Monte Carlo simulation")
    simulate.add_argument("spec")
    simulate.add_argument("--scheme", required=True)
    simulate.add_argument("--trials", type=int, required=True)
    simulate.add_argument("--seed", type=int, required=True)

    example = commands.add_parser("example", help="Generate a built-in example")
    example.add_argument("name", choices=["gridworld", "nodshake"])
    example.add_argument("--out")
    return parser


def _request(namespace: argparse.Namespace) -> BaseModel:
    model, _ = COMMANDS[namespace.command]
    fields = {
        key: value
        for key, value in vars(namespace).items()
        if key not in ("command", "version") and value is not None
    }
    try:
        return model(**fields)
    except ValidationError as e:
        raise UsageError(
            f"Invalid arguments for {namespace.command}",
            details={"errors": [error["msg"] for error in e.errors()]},
        ) from e


@logging_middleware
def dispatch(namespace: argparse.Namespace, config: AppConfig) -> int:
    """Run one parsed command and print its output on stdout."""
    if namespace.version:
        print(
            VersionResponse(
                version=__version__ if config.version == "unknown" else config.version,
                app_env=config.app_env,
            ).model_dump_json()
        )
        return 0
    if namespace.command is None:
        raise UsageError("No command given", details={"commands": list(COMMANDS)})

    request = _request(namespace)
    _, handler = COMMANDS[namespace.command]
    output = handler(request, config, SpecFileLanguageRepository())
    if output.text:
        print(output.text)
    return output.exit_code


@error_handler_middleware
def run(argv: Sequence[str]) -> int:
    config = AppConfig.from_env()
    logger.setLevel(config.log_level)
    namespace = build_parser().parse_args(list(argv))
    return dispatch(namespace, config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point.

    Returns:
        Exit code: 0 on success, 1 on invalid input or failed computation,
        2 on command line misuse.
    """
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else 0
