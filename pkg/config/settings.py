"""Centralized configuration for the gbit inference toolbox."""

from typing import Annotated, Any, List

from pydantic_settings import BaseSettings, NoDecode, SettingsConfigDict
from pydantic import Field, field_validator
import json


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="allow",
        env_prefix="",
        case_sensitive=False,
        protected_namespaces=(),
    )

    # Oracle Configuration
    oracle_max_n: int = Field(default=8, ge=1, le=12)
    lattice_max_n: int = Field(default=3, ge=1)
    exhaustive_max_n: int = Field(default=3, ge=1)
    state_check_max_n: int = Field(default=4, ge=1)

    # Verification Configuration
    verify_random_pairs: int = 10_000
    verify_random_states: int = 100
    verify_axiom_trials: int = Field(default=10_000, ge=1)
    verify_tomography_shots: int = Field(default=100_000, ge=1)
    verify_kinds: Annotated[List[str], NoDecode] = ["qubit"]

    # Numerical Tolerances
    born_tol: float = 1e-12
    hermitian_tol: float = 1e-10
    psd_tol: float = 1e-10
    classify_tol: float = 1e-9
    max_info_slack: float = 1e-6
    conservation_tol: float = 1e-9
    entanglement_guard: float = 1e-9

    # Simulation Configuration
    default_seed: int = 42
    default_shots: int = 10_000
    sigma_bound: float = 3.0
    frequency_band: float = 5.0
    sim_workers: int = Field(default=1, ge=1)

    # Output Configuration
    default_format: str = "table"

    # Logging Configuration
    log_level: str = "INFO"

    @field_validator("verify_kinds", mode="before")
    @classmethod
    def parse_json_list(cls, v: Any) -> Any:
        if isinstance(v, str) and (v.startswith("[") or v.startswith("{")):
            try:
                return json.loads(v)
            except Exception:
                return v
        if isinstance(v, str):
            return [i.strip() for i in v.split(",") if i.strip()]
        return v


settings = Settings()
