"""
Settings management using Pydantic for environment variables.

The environment only supplies the default output directory
(GSEMO_OUTPUT_DIR); everything else about an experiment lives in
ExperimentConfig. Loads from a local .env file when present.
"""

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Optional settings:
        - GSEMO_OUTPUT_DIR: Default directory for instances, results and reports (default: runs)
    """

    model_config = SettingsConfigDict(
        env_prefix="GSEMO_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    output_dir: Path = Field(
        default=Path("runs"), description="Default output directory for generated artefacts"
    )

    @property
    def descriptions_file(self) -> Path:
        """Path to the algorithm descriptions shipped with the package."""
        return Path(__file__).parent / "algorithm_descriptions.yaml"


# Singleton instance
settings = Settings()
