# src/rif_kit/indicators/features.py

import dataclasses
import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from rif_kit.market_data.config import SessionWindow
from rif_kit.market_data.models import TradingDay

from . import technical
from .config import IndicatorConfig

logger = logging.getLogger(__name__)

OBSERVATION_SIZE = 8


@dataclass(frozen=True)
class PriceWindow:
    high: np.ndarray
    low: np.ndarray
    close: np.ndarray


@dataclass(frozen=True)
class Indicator:
    compute: Callable[[PriceWindow, IndicatorConfig], float]
    fixed_bounds: bool


INDICATORS: dict[str, Indicator] = {
    "williams_r": Indicator(
        lambda w, cfg: technical.williams_r(
            w.high, w.low, w.close, cfg.williams_r_period
        ),
        fixed_bounds=True,
    ),
    "rsi": Indicator(
        lambda w, cfg: technical.rsi(w.close, cfg.rsi_period),
        fixed_bounds=True,
    ),
    "cci": Indicator(
        lambda w, cfg: technical.cci(w.high, w.low, w.close, cfg.cci_period),
        fixed_bounds=False,
    ),
    "ultimate_oscillator": Indicator(
        lambda w, cfg: technical.ultimate_oscillator(
            w.high, w.low, w.close, cfg.ultimate_periods
        ),
        fixed_bounds=True,
    ),
    "adx": Indicator(
        lambda w, cfg: technical.adx(w.high, w.low, w.close, cfg.adx_period),
        fixed_bounds=True,
    ),
    "roc": Indicator(
        lambda w, cfg: technical.roc(w.close, cfg.roc_period),
        fixed_bounds=False,
    ),
    "stochastic_k": Indicator(
        lambda w, cfg: technical.stochastic_k(
            w.high, w.low, w.close, cfg.stochastic_period
        ),
        fixed_bounds=True,
    ),
}


def minmax_normalize(x: float, lo: float, hi: float) -> float:
    """Clamp ``x`` to [lo, hi] and map it linearly onto [-1, 1]."""
    if lo == hi:
        raise ValueError("degenerate bounds: lo == hi")
    if lo > hi:
        raise ValueError("bounds must satisfy lo < hi")
    clamped = min(max(x, lo), hi)
    return 2.0 * (clamped - lo) / (hi - lo) - 1.0


def raw_price_features(
    day: TradingDay,
    t: int,
    config: IndicatorConfig,
    session: SessionWindow = SessionWindow(),
) -> np.ndarray:
    """Raw indicator values at bar ``t`` from the lookback window ending at ``t``."""
    if t < session.lookback:
        raise technical.InsufficientHistoryError(
            f"t={t} is inside the {session.lookback}-bar lookback"
        )
    if t >= len(day.bars):
        raise IndexError(f"t={t} outside day of {len(day.bars)} bars")
    if config.required_bars() > session.lookback + 1:
        raise technical.InsufficientHistoryError(
            f"indicators need {config.required_bars()} bars, "
            f"the lookback window holds {session.lookback + 1}"
        )
    window = slice(t - session.lookback, t + 1)
    prices = PriceWindow(day.highs[window], day.lows[window], day.closes[window])
    return np.array(
        [INDICATORS[name].compute(prices, config) for name in config.features],
        dtype=np.float64,
    )


def _normalize_row(raw: np.ndarray, config: IndicatorConfig) -> np.ndarray:
    return np.array(
        [
            minmax_normalize(float(x), *config.bounds[name])
            for x, name in zip(raw, config.features)
        ],
        dtype=np.float64,
    )


def time_remaining_feature(t: int, session: SessionWindow) -> float:
    span = session.forced_exit_index - session.first_decision_index
    remaining = (session.forced_exit_index - t) / span
    return minmax_normalize(remaining, 0.0, 1.0)


def build_observation(
    day: TradingDay,
    t: int,
    position: int,
    config: IndicatorConfig,
    session: SessionWindow = SessionWindow(),
) -> np.ndarray:
    """The 8-dim state at bar ``t``: six price features, position, time remaining.

    Reads only bars at indices <= t. Every component is in [-1, 1].
    """
    if position not in (0, 1):
        raise ValueError("position must be 0 or 1")
    price = _normalize_row(raw_price_features(day, t, config, session), config)
    return np.concatenate(
        (price, [2.0 * position - 1.0, time_remaining_feature(t, session)])
    )


def price_features(
    day: TradingDay,
    config: IndicatorConfig,
    session: SessionWindow = SessionWindow(),
) -> np.ndarray:
    """Normalised price features for every decision minute, shape (decisions, 6)."""
    rows = [
        _normalize_row(raw_price_features(day, t, config, session), config)
        for t in range(session.first_decision_index, session.forced_exit_index + 1)
    ]
    return np.vstack(rows)


def fit_bounds(
    days: list[TradingDay],
    config: IndicatorConfig,
    session: SessionWindow = SessionWindow(),
) -> IndicatorConfig:
    """Fit min/max bounds of the unbounded features on ``days``.

    Call with training days only. A degenerate fit (all values equal)
    widens to (v - 1, v + 1).
    """
    fitted = [n for n in config.features if not INDICATORS[n].fixed_bounds]
    if not fitted or not days:
        return config

    raw = np.vstack(
        [
            raw_price_features(day, t, config, session)
            for day in days
            for t in range(session.first_decision_index, session.forced_exit_index + 1)
        ]
    )
    bounds = dict(config.bounds)
    for name in fitted:
        column = raw[:, config.features.index(name)]
        lo, hi = float(np.min(column)), float(np.max(column))
        if lo == hi:
            lo, hi = lo - 1.0, hi + 1.0
        bounds[name] = (lo, hi)
        logger.debug("Fitted bounds for %s: [%.6g, %.6g]", name, lo, hi)

    logger.info("Fitted bounds for %s on %d days", fitted, len(days))
    return dataclasses.replace(config, bounds=bounds)
