import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from ..middleware.logging import logger
from ..models.domain import EnumerationBudget


class AppConfig(BaseModel):
    """Application configuration.

    Environment values only tune operational defaults such as logging,
    enumeration budgets and worker counts. They never change a computed
    value and never seed randomness.
    """

    app_env: str = Field(default="local", description="Environment (local, ci, prod)")
    version: str = Field(default="unknown", description="Application version")
    log_level: str = Field(default="WARNING", description="Log level of the CLI")
    max_encoder_count: int = Field(
        default=10**6, ge=1, description="Largest M^N the oracle enumerates"
    )
    max_decoder_count: int = Field(
        default=10**6, ge=1, description="Largest N^M the oracle enumerates"
    )
    simulation_block_size: int = Field(
        default=10_000, ge=1, description="Trials per seeded simulation block"
    )
    simulation_workers: int = Field(
        default=1, ge=1, description="Threads running simulation blocks"
    )
    decimal_places: int = Field(
        default=4, ge=0, description="Decimals printed next to exact values"
    )

    @classmethod
    def from_env(cls) -> "AppConfig":
        """Load configuration from environment variables.

        In 'local' mode (default), it first loads variables from a .env file.
        In 'ci' and 'prod' modes, it reads directly from environment variables.
        """

        app_env = os.getenv("APP_ENV", "local").lower()
        logger.debug("App environment", extra={"app_env": app_env})
        if app_env == "local":
            dotenv_path = Path(".env")
            load_dotenv(dotenv_path=dotenv_path, override=True)
            logger.debug("Loaded .env file", extra={"dotenv_path": str(dotenv_path)})
        elif app_env not in ["ci", "prod"]:
            raise ValueError(f"Invalid app environment: {app_env}")

        return cls(
            app_env=app_env,
            version=os.getenv("VERSION", "unknown"),
            log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
            max_encoder_count=int(os.getenv("MAX_ENCODER_COUNT", 10**6)),
            max_decoder_count=int(os.getenv("MAX_DECODER_COUNT", 10**6)),
            simulation_block_size=int(os.getenv("SIMULATION_BLOCK_SIZE", 10_000)),
            simulation_workers=int(os.getenv("SIMULATION_WORKERS", 1)),
            decimal_places=int(os.getenv("DECIMAL_PLACES", 4)),
        )

    def budget(self) -> EnumerationBudget:
        """Enumeration limits for the oracle commands."""
        return EnumerationBudget(
            max_encoder_count=self.max_encoder_count,
            max_decoder_count=self.max_decoder_count,
        )
