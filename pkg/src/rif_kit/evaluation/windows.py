# src/rif_kit/evaluation/windows.py

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from datetime import date

from rif_kit.market_data import TradingDay

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RollingWindow:
    """Contiguous train, validation and test day sets, in that order."""

    index: int
    train: tuple[TradingDay, ...]
    validation: tuple[TradingDay, ...]
    test: tuple[TradingDay, ...]

    def __post_init__(self) -> None:
        if not (self.train and self.validation and self.test):
            raise ValueError("every window range must hold at least one day")
        if not (
            self.train[-1].date < self.validation[0].date
            and self.validation[-1].date < self.test[0].date
        ):
            raise ValueError("window ranges must be ordered and disjoint")

    @property
    def test_range(self) -> tuple[date, date]:
        return self.test[0].date, self.test[-1].date

    def describe(self) -> str:
        return (
            f"window {self.index}: train {self.train[0].date}..{self.train[-1].date}, "
            f"validation {self.validation[0].date}..{self.validation[-1].date}, "
            f"test {self.test[0].date}..{self.test[-1].date}"
        )


def _month(d: date) -> int:
    return d.year * 12 + d.month - 1


def make_windows(
    days: Sequence[TradingDay],
    train_months: int = 12,
    validation_months: int = 3,
    test_months: int = 3,
) -> list[RollingWindow]:
    """Calendar-month rolling windows advancing by ``test_months``.

    Test ranges tile every month from the end of the first validation range
    onwards exactly once; the final test range is clipped to the data.
    """
    if min(train_months, validation_months, test_months) <= 0:
        raise ValueError("window lengths must be > 0")
    if not days:
        raise ValueError("dataset is empty")
    ordered = sorted(days, key=lambda d: d.date)
    first = _month(ordered[0].date)
    last = _month(ordered[-1].date)
    needed = train_months + validation_months + test_months
    if last - first + 1 < needed:
        raise ValueError(
            f"dataset spans {last - first + 1} months, need at least {needed}"
        )

    def select(lo: int, hi: int) -> tuple[TradingDay, ...]:
        return tuple(d for d in ordered if lo <= _month(d.date) < hi)

    windows: list[RollingWindow] = []
    start = first
    while start + train_months + validation_months <= last:
        val_start = start + train_months
        test_start = val_start + validation_months
        test = select(test_start, test_start + test_months)
        if test:
            windows.append(
                RollingWindow(
                    index=len(windows),
                    train=select(start, val_start),
                    validation=select(val_start, test_start),
                    test=test,
                )
            )
        start += test_months
    logger.info("Built %d rolling windows over %d days", len(windows), len(ordered))
    return windows


def make_day_windows(
    days: Sequence[TradingDay],
    train_days: int,
    validation_days: int,
    test_days: int,
) -> list[RollingWindow]:
    """The same protocol counted in trading days."""
    if min(train_days, validation_days, test_days) <= 0:
        raise ValueError("window lengths must be > 0")
    ordered = sorted(days, key=lambda d: d.date)
    needed = train_days + validation_days + test_days
    if len(ordered) < needed:
        raise ValueError(f"dataset has {len(ordered)} days, need at least {needed}")

    windows: list[RollingWindow] = []
    start = 0
    while start + train_days + validation_days < len(ordered):
        val_start = start + train_days
        test_start = val_start + validation_days
        windows.append(
            RollingWindow(
                index=len(windows),
                train=tuple(ordered[start:val_start]),
                validation=tuple(ordered[val_start:test_start]),
                test=tuple(ordered[test_start : test_start + test_days]),
            )
        )
        start += test_days
    logger.info("Built %d day-count windows over %d days", len(windows), len(ordered))
    return windows
