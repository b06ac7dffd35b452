"""
Application settings.
Values come from CONCYCLIC_* environment variables (a local .env is loaded by app.py).
"""
from functools import lru_cache
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="CONCYCLIC_", extra="ignore")

    # Numerics
    float_rel_tol: float = Field(1e-9, gt=0, lt=1e-3, description="Float-mode chord tolerance, relative to a full turn")
    concyclic_rel_tol: float = Field(1e-9, gt=0, lt=1e-3, description="Cartesian deviation tolerance, relative to the radius")

    # Guards
    oracle_max_n: int = Field(16, ge=4, le=16)
    enumerate_limit: int = Field(4096, ge=1)
    max_branches: int = Field(1_000_000, ge=1)
    precondition_check_max_n: int = Field(4096, ge=4)

    # Diagnostics
    debug_checks: bool = False
    log_level: str = "WARNING"

    # Bench
    bench_sizes: List[int] = Field(default_factory=lambda: [2 ** k for k in range(10, 19)])
    bench_seed: int = 0


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
