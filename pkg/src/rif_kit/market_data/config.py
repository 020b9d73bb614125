# src/rif_kit/market_data/config.py

from dataclasses import dataclass
from datetime import date, datetime, time
from typing import Literal

GeneratorKind = Literal["random-walk", "deterministic-trend", "sinusoid"]


def _minutes(t: time) -> int:
    return t.hour * 60 + t.minute


@dataclass(frozen=True)
class SessionWindow:
    """Liquid-session clock for one-minute bars, exchange-local and zone-naive.

    Bar ``i`` of a complete day starts at ``open_time + i`` minutes. The agent
    decides at every index from ``first_decision_index`` through
    ``forced_exit_index``; a decision at ``t`` fills at the open of bar ``t + 1``.
    """

    open_time: time = time(9, 30)
    close_time: time = time(17, 0)  # exclusive
    first_decision: time = time(10, 32)
    forced_exit: time = time(16, 58)
    lookback: int = 61

    def __post_init__(self) -> None:
        if _minutes(self.close_time) <= _minutes(self.open_time):
            raise ValueError("close_time must be after open_time")
        if self.lookback < 1:
            raise ValueError("lookback must be >= 1")
        if self.first_decision_index < self.lookback:
            raise ValueError(
                f"first_decision leaves {self.first_decision_index} bars of history, "
                f"lookback needs {self.lookback}"
            )
        if self.forced_exit_index <= self.first_decision_index:
            raise ValueError("forced_exit must be after first_decision")
        if self.forced_exit_index > self.bars_per_session - 2:
            raise ValueError("forced_exit must leave one bar to fill the exit")

    @property
    def bars_per_session(self) -> int:
        return _minutes(self.close_time) - _minutes(self.open_time)

    @property
    def first_decision_index(self) -> int:
        return self.index_of(self.first_decision)

    @property
    def forced_exit_index(self) -> int:
        return self.index_of(self.forced_exit)

    @property
    def decision_count(self) -> int:
        return self.forced_exit_index - self.first_decision_index + 1

    def index_of(self, clock: time) -> int:
        return _minutes(clock) - _minutes(self.open_time)

    def contains(self, timestamp: datetime) -> bool:
        """True for weekday timestamps inside [open_time, close_time)."""
        if timestamp.weekday() >= 5:
            return False
        minute = _minutes(timestamp.time())
        return _minutes(self.open_time) <= minute < _minutes(self.close_time)


@dataclass(frozen=True)
class SyntheticSpec:
    """Parameters of a synthetic minute-bar series.

    ``volatility`` is the per-minute log-return scale for random walks, the
    log-amplitude for sinusoids and the wick scale for deterministic trends.
    ``drift`` is the per-minute log drift for every kind.
    """

    kind: GeneratorKind = "random-walk"
    days: int = 10
    volatility: float = 0.0005
    drift: float = 0.0
    seed: int = 0
    start: date = date(2023, 1, 2)
    base_price: float = 100.0
    period_minutes: int = 120

    def __post_init__(self) -> None:
        if self.days <= 0:
            raise ValueError("days must be > 0")
        if not self.volatility > 0:
            raise ValueError("volatility must be > 0")
        if not self.base_price > 0:
            raise ValueError("base_price must be > 0")
        if self.period_minutes <= 0:
            raise ValueError("period_minutes must be > 0")
