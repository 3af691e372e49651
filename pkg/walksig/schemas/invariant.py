"""Invariant selection shared by the invariant, scan and verify commands."""

from typing import Literal, Optional, Tuple, get_args

from pydantic import BaseModel, ConfigDict, Field, model_validator

from walksig.core.config import (
    DEFAULT_INVARIANT,
    DEFAULT_MODE,
    DEFAULT_NODE_BUDGET,
    DEFAULT_POWER,
    DEFAULT_PRIMES,
    EXACT_CUTOFF,
)

InvariantKind = Literal[
    "adjacency",
    "support-u",
    "splus-u",
    "splus-u2",
    "splus-u3",
    "splus-u-p",
    "adjacency-power-support",
]

INVARIANT_KINDS: Tuple[str, ...] = get_args(InvariantKind)

# Kinds whose power is fixed by their name.
FIXED_POWERS = {
    "adjacency": 1,
    "support-u": 1,
    "splus-u": 1,
    "splus-u2": 2,
    "splus-u3": 3,
}


class InvariantConfig(BaseModel):
    """Everything that determines a signature, plus run-time knobs."""

    kind: InvariantKind = DEFAULT_INVARIANT
    power: Optional[int] = Field(default=None, ge=1)
    mode: Literal["exact", "modular"] = DEFAULT_MODE
    primes: Tuple[int, ...] = DEFAULT_PRIMES
    exact_cutoff: int = EXACT_CUTOFF
    strict_paper: bool = False
    jobs: int = Field(default=1, ge=1)
    node_budget: int = Field(default=DEFAULT_NODE_BUDGET, ge=1)
    streaming: bool = False

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_power(self) -> "InvariantConfig":
        fixed = FIXED_POWERS.get(self.kind)
        if fixed is not None and self.power not in (None, fixed):
            raise ValueError(f"invariant {self.kind} has fixed power {fixed}")
        return self

    @property
    def effective_power(self) -> int:
        if self.kind in FIXED_POWERS:
            return FIXED_POWERS[self.kind]
        if self.power is not None:
            return self.power
        return DEFAULT_POWER if self.kind == "splus-u-p" else 2

    def descriptor(self) -> str:
        """Short text naming what was computed, e.g. ``splus-u3:p=3:modular``."""
        text = f"{self.kind}:p={self.effective_power}:{self.mode}"
        if self.strict_paper and self.kind in ("splus-u3", "splus-u-p"):
            text += ":strict-paper"
        return text
