# src/rif_kit/market_data/sessions.py

import logging
from collections import defaultdict
from datetime import date, datetime, timedelta
from pathlib import Path

from rif_kit.errors import DataError
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook

from .config import SessionWindow
from .csv_parser import read_ohlcv
from .models import MinuteBar, TradingDay

logger = logging.getLogger(__name__)

DEFAULT_MAX_MISSING_BARS = 5


def segment_days(
    bars: list[MinuteBar],
    session: SessionWindow = SessionWindow(),
    max_missing_bars: int = DEFAULT_MAX_MISSING_BARS,
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> list[TradingDay]:
    """Split sorted bars into one ``TradingDay`` per weekday session.

    Bars outside the session window are dropped. Up to ``max_missing_bars``
    missing minutes are filled with flat bars at the previous close (volume 0);
    beyond that the day is flagged incomplete and kept unfilled.
    """
    if max_missing_bars < 0:
        raise ValueError("max_missing_bars must be >= 0")

    by_date: dict[date, list[MinuteBar]] = defaultdict(list)
    previous: datetime | None = None
    for bar in bars:
        if previous is not None and bar.timestamp <= previous:
            raise ValueError("bars must be sorted by timestamp")
        previous = bar.timestamp
        if session.contains(bar.timestamp):
            by_date[bar.timestamp.date()].append(bar)

    days = []
    for day_date in sorted(by_date):
        day_bars = by_date[day_date]
        missing = session.bars_per_session - len(day_bars)
        if missing > max_missing_bars:
            logger.warning(
                "Day %s missing %d minutes (> %d), flagged incomplete",
                day_date,
                missing,
                max_missing_bars,
            )
            metrics_hook.increment(names.MARKET_DATA_DAYS_INCOMPLETE)
            days.append(
                TradingDay(
                    day_date, tuple(day_bars), incomplete=True, missing_minutes=missing
                )
            )
            continue

        if missing:
            logger.debug("Day %s: filling %d missing minutes", day_date, missing)
        days.append(
            TradingDay(
                day_date,
                _fill_gaps(day_date, day_bars, session),
                missing_minutes=missing,
            )
        )
    return days


def _fill_gaps(
    day_date: date, day_bars: list[MinuteBar], session: SessionWindow
) -> tuple[MinuteBar, ...]:
    session_start = datetime.combine(day_date, session.open_time)
    by_minute = {b.timestamp: b for b in day_bars}
    filled: list[MinuteBar] = []
    last_price = day_bars[0].open
    for i in range(session.bars_per_session):
        ts = session_start + timedelta(minutes=i)
        bar = by_minute.get(ts)
        if bar is None:
            bar = MinuteBar(ts, last_price, last_price, last_price, last_price, 0)
        filled.append(bar)
        last_price = bar.close
    return tuple(filled)


def complete_days(days: list[TradingDay]) -> list[TradingDay]:
    kept = [d for d in days if not d.incomplete]
    if len(kept) < len(days):
        logger.warning("Dropped %d incomplete days", len(days) - len(kept))
    return kept


def load_days(
    path: str | Path,
    session: SessionWindow = SessionWindow(),
    max_missing_bars: int = DEFAULT_MAX_MISSING_BARS,
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> list[TradingDay]:
    """Parse a CSV file and return its complete trading days."""
    bars = read_ohlcv(path, metrics_hook=metrics_hook)
    days = complete_days(
        segment_days(bars, session, max_missing_bars, metrics_hook=metrics_hook)
    )
    if not days:
        raise DataError(f"no complete trading days in {path}")
    logger.info("Loaded %d trading days from %s", len(days), path)
    return days
