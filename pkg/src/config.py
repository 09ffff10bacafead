from pathlib import Path
from typing import Any

from pydantic import ConfigDict, field_validator
from pydantic_settings import BaseSettings

BASE_DIR = Path(__file__).parent


class Settings(BaseSettings):
    REDIS_DOMAIN: str = 'localhost'
    REDIS_PORT: int = 6379
    REDIS_PASSWORD: str | None = None
    CACHE_ENABLED: bool = True
    CACHE_TTL: int = 3600
    RATE_LIMIT_TIMES: int = 10
    RATE_LIMIT_SECONDS: int = 60
    ORACLE_BUDGET_LOG2: int = 20
    ORACLE_EXPENSIVE_LOG2: int = 24
    NUMERIC_MAX_Q: int = 8
    DATA_DIR: Path = BASE_DIR / "data"
    LOG_CONFIG: Path = BASE_DIR.parent / "logging.ini"

    @field_validator("NUMERIC_MAX_Q")
    @classmethod
    def validate_numeric_max_q(cls, v: Any):
        if v < 2 or v & (v - 1):
            raise ValueError("NUMERIC_MAX_Q must be a power of two")
        return v

    @field_validator("ORACLE_BUDGET_LOG2", "ORACLE_EXPENSIVE_LOG2")
    @classmethod
    def validate_budget(cls, v: Any):
        if not 8 <= v <= 30:
            raise ValueError("oracle budgets must lie between 2^8 and 2^30 elements")
        return v

    model_config = ConfigDict(
        extra='ignore',
        env_file=".env",
        env_file_encoding="utf-8"
    )


config = Settings()
