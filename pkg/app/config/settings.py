from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Model configuration
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="TQFT_",
        case_sensitive=True,
        extra="ignore",
    )

    # Project settings
    PROJECT_NAME: str = "tqft2d"
    PROJECT_DESCRIPTION: str = "Commutative Frobenius algebras and the two-dimensional TQFTs they define"
    PROJECT_VERSION: str = "0.1.0"

    # Logging (records go to stderr; reports own stdout)
    LOG_LEVEL: str = "WARNING"
    LOG_TO_FILE: bool = False  # Set to True to enable file logging
    LOG_FILE_PATH: Optional[str] = "logs/tqft2d.log"  # File path when LOG_TO_FILE is True
    LOG_FORMAT_JSON: bool = False  # Set to True for JSON log format

    # Message catalog language
    LANGUAGE: str = "en"

    # Evaluation
    SIZE_CAP: int = 1_000_000  # maximum number of matrix entries per evaluation step

    # Fuzz harnesses
    FUZZ_COUNT: int = 1000
    FUZZ_SEED: int = 0
    FUZZ_MAX_WIDTH: int = 4
    FUZZ_MAX_LAYERS: int = 6

    # Closed invariant tables
    MAX_GENUS: int = 6

    # Idempotent splitting: candidate elements tried before giving up on one summand
    SPLIT_ATTEMPTS: int = 64


# Initialize settings
settings = Settings()
