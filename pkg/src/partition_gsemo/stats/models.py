"""Data models for per-setting comparison results."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class Verdict(str, Enum):
    """Per-instance outcome of GSEMO against GREEDY."""

    LOSS = "loss"
    WIN = "win"
    TIE = "tie"


# Per-setting symbols: GSEMO statistic significantly greater / less / no difference
GREATER = "+"
LESS = "-"
NO_DIFFERENCE = "*"

STATISTICS = ("min", "mean", "max")


class SettingSummary(BaseModel):
    """
    Comparison of GSEMO against GREEDY over the instances of one setting.

    gsemo_stats maps instance id to (GSEMO-, GSEMO*, GSEMO+), the min, mean and
    max over repeats. verdicts maps "min" / "mean" / "max" to '+', '-' or '*'.
    """

    n: int
    density: Optional[float] = None
    constraint: str
    greedy_values: Dict[str, float]
    gsemo_stats: Dict[str, Tuple[float, float, float]]
    verdicts: Dict[str, str]
    losses: int = Field(ge=0)
    wins: int = Field(ge=0)
    ties: int = Field(ge=0)
    instance_verdicts: Dict[str, Verdict] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _counts_cover_instances(self):
        if self.losses + self.wins + self.ties != len(self.greedy_values):
            raise ValueError("L + W + T must equal the number of instances")
        for symbol in self.verdicts.values():
            if symbol not in (GREATER, LESS, NO_DIFFERENCE):
                raise ValueError(f"Unknown verdict symbol {symbol!r}")
        return self

    @property
    def instance_count(self) -> int:
        return len(self.greedy_values)

    @property
    def lwt(self) -> str:
        return f"{self.losses}-{self.wins}-{self.ties}"

    def column(self, statistic: str) -> List[float]:
        """Per-instance values of GSEMO-/GSEMO*/GSEMO+ ("min"/"mean"/"max")."""
        index = STATISTICS.index(statistic)
        return [self.gsemo_stats[key][index] for key in sorted(self.gsemo_stats)]
