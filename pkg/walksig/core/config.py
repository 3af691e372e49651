"""Application configuration."""

from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict

# Signatures
# Largest primes below 2**31: products of two residues stay inside int64.
DEFAULT_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579)
EXACT_CUTOFF = 600
DEFAULT_MODE = "modular"

# Numerics
EIG_MAX_DIMENSION = 2000
DEFAULT_TOLERANCE = 1e-8

# Invariants
DEFAULT_INVARIANT = "splus-u3"
DEFAULT_POWER = 3

# Isomorphism search
DEFAULT_NODE_BUDGET = 10_000_000

# Verification suites
RANDOM_GRAPH_COUNT = 50
RANDOM_REGULAR_COUNT = 30
RANDOM_SEED = 20070601


class Settings(BaseSettings):
    """Environment-driven settings.

    Only the cache location comes from the environment; every algorithm knob
    is a per-run CLI flag collected in ``InvariantConfig``.
    """

    cache_dir: Optional[Path] = None

    model_config = SettingsConfigDict(
        env_prefix="WALKSIG_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()
