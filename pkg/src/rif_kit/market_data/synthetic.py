# src/rif_kit/market_data/synthetic.py

"""Seeded synthetic minute-bar series.

Output is a pure function of ``SyntheticSpec``: one ``np.random.default_rng``
per call, no global state.
"""

import logging
from collections.abc import Callable
from datetime import date, datetime, timedelta

import numpy as np

from .config import SessionWindow, SyntheticSpec
from .models import MinuteBar, TradingDay

logger = logging.getLogger(__name__)


def _random_walk(spec: SyntheticSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    steps = spec.drift + spec.volatility * rng.standard_normal(n)
    return np.cumsum(steps)


def _deterministic_trend(
    spec: SyntheticSpec, n: int, rng: np.random.Generator  # noqa: ARG001
) -> np.ndarray:
    return spec.drift * np.arange(1, n + 1, dtype=np.float64)


def _sinusoid(
    spec: SyntheticSpec, n: int, rng: np.random.Generator  # noqa: ARG001
) -> np.ndarray:
    k = np.arange(1, n + 1, dtype=np.float64)
    wave = np.sin(2 * np.pi * k / spec.period_minutes)
    return spec.drift * k + spec.volatility * wave


LogPathFn = Callable[[SyntheticSpec, int, np.random.Generator], np.ndarray]

_GENERATORS: dict[str, LogPathFn] = {
    "random-walk": _random_walk,
    "deterministic-trend": _deterministic_trend,
    "sinusoid": _sinusoid,
}


def generate_synthetic(
    spec: SyntheticSpec, session: SessionWindow = SessionWindow()
) -> list[TradingDay]:
    """Generate ``spec.days`` complete weekday sessions.

    Prices continue across days: each bar opens at the previous close.
    """
    try:
        log_path_fn = _GENERATORS[spec.kind]
    except KeyError:
        raise ValueError(f"Unknown generator kind: {spec.kind}")

    rng = np.random.default_rng(spec.seed)
    per_day = session.bars_per_session
    n = spec.days * per_day

    closes = spec.base_price * np.exp(log_path_fn(spec, n, rng))
    opens = np.concatenate(([spec.base_price], closes[:-1]))
    wick = spec.volatility * 0.5
    highs = np.maximum(opens, closes) * np.exp(wick * rng.uniform(0, 1, n))
    lows = np.minimum(opens, closes) * np.exp(-wick * rng.uniform(0, 1, n))
    volumes = rng.integers(500, 1500, n)

    days = []
    for day_index, day_date in enumerate(_weekdays(spec.start, spec.days)):
        session_start = datetime.combine(day_date, session.open_time)
        lo = day_index * per_day
        bars = tuple(
            MinuteBar(
                session_start + timedelta(minutes=i),
                float(opens[lo + i]),
                float(highs[lo + i]),
                float(lows[lo + i]),
                float(closes[lo + i]),
                int(volumes[lo + i]),
            )
            for i in range(per_day)
        )
        days.append(TradingDay(day_date, bars))

    logger.info(
        "Generated %d synthetic %s days (seed=%d)", spec.days, spec.kind, spec.seed
    )
    return days


def _weekdays(start: date, count: int) -> list[date]:
    out: list[date] = []
    current = start
    while len(out) < count:
        if current.weekday() < 5:
            out.append(current)
        current += timedelta(days=1)
    return out
