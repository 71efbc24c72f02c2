from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic import field_validator
from pydantic_settings import SettingsConfigDict

from hilbert_depth.utils.basic_logger import normalise_level
from hilbert_depth.utils.pydantic_advanced_settings import CustomizedSettings


class HdepthSettings(CustomizedSettings):
    node_cap: int = Field(
        default=100_000_000,
        gt=0,
        description="Maximum DFS nodes explored by a lemma certification",
    )
    enumeration_cap: int = Field(
        default=25,
        ge=1,
        le=30,
        description="Largest n for which alpha vectors are counted over all 2^n supports",
    )
    chunk_bits: int = Field(
        default=20,
        ge=4,
        le=26,
        description="Supports are enumerated in chunks of 2^chunk_bits",
    )
    jobs: int = Field(default=1, ge=1, description="Worker processes for sweeps")
    oracle_max_n: int = Field(default=14, ge=1)
    oracle_max_k: int = Field(default=7, ge=1)
    log_level: str = Field(default="WARNING", description="Console log level")
    log_file: Optional[Path] = Field(default=None, description="Also log at DEBUG to this file")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="HDEPTH_",
        extra="ignore",
    )

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, level: str) -> str:
        return normalise_level(level)
