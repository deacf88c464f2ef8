"""Runtime settings for InvPow."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class InvPowSettings(BaseSettings):
    """
    Process-wide limits and defaults.

    Values can be overridden with ``INVPOW_``-prefixed environment variables,
    e.g. ``INVPOW_MAX_POWERSET_WIDTH=12``.
    """

    model_config = SettingsConfigDict(env_prefix="INVPOW_", extra="ignore")

    # Enumeration
    max_rank: int = Field(default=4, ge=0, le=4)  # Ceiling for enumerate_universe
    exhaustive_rank: int = Field(default=3, ge=0, le=3)  # Ceiling for pairwise/triple sweeps

    # Materialization
    max_powerset_width: int = Field(default=16, ge=0)  # Largest |X| whose P(X) is built
    numeral_cap: int = Field(default=12, ge=0)  # Largest integer literal in the surface syntax

    # Audit
    default_seed: int = 42
    workers: int = Field(default=1, ge=1)

    log_level: str = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> InvPowSettings:
    """Return the cached settings instance."""
    return InvPowSettings()
