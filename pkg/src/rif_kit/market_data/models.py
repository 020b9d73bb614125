# src/rif_kit/market_data/models.py

import math
from dataclasses import dataclass
from datetime import date, datetime
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class MinuteBar:
    """One OHLCV bar. Timestamp is the bar's start minute, exchange-local."""

    timestamp: datetime
    open: float
    high: float
    low: float
    close: float
    volume: int

    def __post_init__(self) -> None:
        prices = (self.open, self.high, self.low, self.close)
        if not all(math.isfinite(p) and p > 0 for p in prices):
            raise ValueError("prices must be finite and > 0")
        if self.low > min(self.open, self.close):
            raise ValueError("low must be <= min(open, close)")
        if self.high < max(self.open, self.close):
            raise ValueError("high must be >= max(open, close)")
        if self.volume < 0:
            raise ValueError("volume must be >= 0")


@dataclass(frozen=True)
class TradingDay:
    """One session's bars in timestamp order.

    ``incomplete`` marks days whose missing minutes exceeded the gap
    threshold; such days keep their raw bars and are not tradable.
    """

    date: date
    bars: tuple[MinuteBar, ...]
    incomplete: bool = False
    missing_minutes: int = 0

    def __len__(self) -> int:
        return len(self.bars)

    @cached_property
    def opens(self) -> np.ndarray:
        return self._column("open")

    @cached_property
    def highs(self) -> np.ndarray:
        return self._column("high")

    @cached_property
    def lows(self) -> np.ndarray:
        return self._column("low")

    @cached_property
    def closes(self) -> np.ndarray:
        return self._column("close")

    def _column(self, name: str) -> np.ndarray:
        values = np.array([getattr(b, name) for b in self.bars], dtype=np.float64)
        values.setflags(write=False)
        return values
