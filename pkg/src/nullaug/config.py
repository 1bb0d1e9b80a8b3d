"""Augmentation settings and the result record every strategy returns."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import InvalidInputError
from .graph import Graph


class Strategy(enum.Enum):
    ZERO_K = "0k"
    ONE_K = "1k"
    TWO_K = "2k"
    LNA = "lna"
    ADA_C = "ada-c"
    ADA_BC = "ada-bc"
    ADA_CC = "ada-cc"
    ADA_EC = "ada-ec"

    @classmethod
    def parse(cls, name: str) -> "Strategy":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(s.value for s in cls)
            raise InvalidInputError(f"unknown strategy {name!r}; choose from {choices}") from None

    @property
    def is_null_model(self) -> bool:
        return self in (Strategy.ZERO_K, Strategy.ONE_K, Strategy.TWO_K)

    @property
    def is_approximate(self) -> bool:
        return self.value.startswith("ada-")


@dataclass(frozen=True)
class AugmentationConfig:
    """Parameters for one augmentation pass.

    ``alpha`` is the fraction of edges rewired (of eligible leaf edges for
    LNA). ``iterations`` is the number of candidates tried by the ADA
    strategies. ``max_attempts_per_swap=None`` means ``100 * m``.
    """

    strategy: Strategy = Strategy.ONE_K
    alpha: float = 0.2
    iterations: int = 5
    seed: int = 0
    max_attempts_per_swap: int | None = None

    def __post_init__(self):
        if isinstance(self.strategy, str):
            object.__setattr__(self, "strategy", Strategy.parse(self.strategy))
        if not 0 < self.alpha <= 1:
            raise InvalidInputError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.iterations < 1:
            raise InvalidInputError(f"iterations must be >= 1, got {self.iterations}")
        if self.max_attempts_per_swap is not None and self.max_attempts_per_swap < 1:
            raise InvalidInputError("max_attempts_per_swap must be >= 1")

    def attempt_budget(self, m: int) -> int:
        if self.max_attempts_per_swap is not None:
            return self.max_attempts_per_swap
        return max(1, 100 * m)

    def swap_target(self, m: int) -> int:
        """Number of rewires for edge-based strategies: ceil(alpha * m)."""
        # round() guards against float noise such as 0.2 * 45 = 9.000000000000002
        return math.ceil(round(self.alpha * m, 9))


@dataclass
class CandidateLog:
    """One ADA candidate construction."""

    index: int
    swaps: int
    attempts: int
    completed: bool
    deviation: float | None = None
    error: str | None = None


@dataclass
class AugmentResult:
    """Augmented graph plus bookkeeping about how it was produced.

    ``warnings`` counts shortfalls (a partial null-model run, a skipped
    leaf candidate); ``skipped`` marks an unchanged graph returned because
    the strategy had nothing to do.
    """

    graph: Graph
    strategy: Strategy
    target: int
    swaps: int
    attempts: int = 0
    warnings: int = 0
    skipped: bool = False
    candidates: list[CandidateLog] = field(default_factory=list)
    chosen: int | None = None
