"""Configuration for the command-line interface."""
import os

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

load_dotenv()


class CLIConfig(BaseSettings):
    """
    CLI configuration. Only stderr diagnostics depend on it; nothing
    here changes what a command writes to stdout.
    """

    # Logging
    log_level: str = os.getenv("LOG_LEVEL", "WARNING")
    log_format: str = os.getenv("LOG_FORMAT", "console")

    class Config:
        env_file = ".env"
        case_sensitive = False
        extra = "ignore"


# Global config instance
cli_config = CLIConfig()
