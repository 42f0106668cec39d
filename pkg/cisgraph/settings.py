from functools import lru_cache

import pydantic

from cisgraph.exceptions import ParameterRangeError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class CisSettings(pydantic.BaseSettings):
    """
    Process wide defaults, read from ``CIS_*`` environment variables.
    """

    jobs: int = 1
    log_level: str = "WARNING"
    json_indent: bool = False

    class Config:
        env_prefix = "CIS_"

    @pydantic.validator("jobs")
    def check_jobs(cls, value: int) -> int:
        if value < 1:
            raise ParameterRangeError(f"CIS_JOBS has to be >= 1, got {value}")
        return value

    @pydantic.validator("log_level")
    def check_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ParameterRangeError(
                f"Log level has to be one of {', '.join(LOG_LEVELS)}, got {value}"
            )
        return level


@lru_cache()
def get_settings() -> CisSettings:
    return CisSettings()
