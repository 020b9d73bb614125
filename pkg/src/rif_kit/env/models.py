# src/rif_kit/env/models.py

from dataclasses import dataclass
from datetime import date, datetime
from typing import Literal

import numpy as np

from rif_kit.labeling import LabelSeries
from rif_kit.market_data import TradingDay

from .rewards import Feedback

Side = Literal["buy", "sell"]


@dataclass(frozen=True)
class EnvState:
    """Where an episode stands before the decision at bar ``t``.

    ``position`` is a_{t-1}; the day starts flat.
    """

    day: TradingDay
    t: int
    position: int
    labels: LabelSeries
    done: bool = False
    steps: int = 0
    trades: int = 0


@dataclass(frozen=True)
class Fill:
    side: Side
    decision_time: datetime
    price: float
    commission: float
    forced: bool = False


@dataclass(frozen=True)
class StepOutcome:
    """Result of one decision.

    ``observation`` is None once the episode is done. ``action`` is the
    action actually applied, after the forced-exit override.
    """

    observation: np.ndarray | None
    feedback: Feedback
    reward: float
    action: int
    label: int
    done: bool
    fill: Fill | None = None

    @property
    def r_rf(self) -> float:
        return self.feedback.r_rf

    @property
    def r_if(self) -> float:
        return self.feedback.r_if

    @property
    def r_rif(self) -> float:
        return self.feedback.r_rif


@dataclass(frozen=True)
class StepRecord:
    """One row of the step log."""

    date: date
    timestamp: datetime
    t: int
    action: int
    label: int
    position: int
    r_rf: float
    r_if: float
    r_rif: float
    commission: float
    fill_price: float | None = None
