# src/rif_kit/indicators/technical.py

"""Textbook technical indicators evaluated at the last bar of a window.

Every function is pure over its input arrays and raises
``InsufficientHistoryError`` when the window is shorter than the indicator
needs. Smoothed indicators (RSI, ADX) seed with a simple mean of the first
``period`` values and then apply Wilder's recursion (an exponential average
with alpha ``1/period``) over the rest of the window, so their value depends
on the window length as well as the period.
"""

import numpy as np
import pandas as pd


class InsufficientHistoryError(ValueError):
    pass


def _require(name: str, values: np.ndarray, needed: int) -> None:
    if len(values) < needed:
        raise InsufficientHistoryError(
            f"{name} needs {needed} bars, got {len(values)}"
        )


def williams_r(
    high: np.ndarray, low: np.ndarray, close: np.ndarray, period: int = 14
) -> float:
    """Williams %R in [-100, 0]; -50 when the window has zero range."""
    _require("williams_r", close, period)
    hh = float(np.max(high[-period:]))
    ll = float(np.min(low[-period:]))
    if hh == ll:
        return -50.0
    return -100.0 * (hh - float(close[-1])) / (hh - ll)


def _wilder(values: np.ndarray, period: int) -> np.ndarray:
    """Wilder averages: seeded with the mean of the first ``period`` values,
    then ``avg += (x - avg) / period`` for each later value."""
    seeded = np.concatenate(([np.mean(values[:period])], values[period:]))
    smoothed = pd.Series(seeded).ewm(alpha=1.0 / period, adjust=False).mean()
    return smoothed.to_numpy()


def rsi(close: np.ndarray, period: int = 14) -> float:
    """Wilder RSI in [0, 100].

    Zero average loss gives 100, unless the average gain is zero too (flat
    prices), which gives 50.
    """
    _require("rsi", close, period + 1)
    diffs = np.diff(np.asarray(close, dtype=np.float64))
    avg_gain = float(_wilder(np.clip(diffs, 0.0, None), period)[-1])
    avg_loss = float(_wilder(np.clip(-diffs, 0.0, None), period)[-1])

    if avg_loss == 0.0:
        return 50.0 if avg_gain == 0.0 else 100.0
    return 100.0 * avg_gain / (avg_gain + avg_loss)


def cci(
    high: np.ndarray, low: np.ndarray, close: np.ndarray, period: int = 20
) -> float:
    """Commodity channel index (unbounded); 0 when mean deviation is 0."""
    _require("cci", close, period)
    typical = (high[-period:] + low[-period:] + close[-period:]) / 3.0
    mean = float(np.mean(typical))
    mean_dev = float(np.mean(np.abs(typical - mean)))
    if mean_dev == 0.0:
        return 0.0
    return (float(typical[-1]) - mean) / (0.015 * mean_dev)


def ultimate_oscillator(
    high: np.ndarray,
    low: np.ndarray,
    close: np.ndarray,
    periods: tuple[int, int, int] = (7, 14, 28),
) -> float:
    """Ultimate oscillator in [0, 100] with 4:2:1 weights."""
    longest = max(periods)
    _require("ultimate_oscillator", close, longest + 1)
    prev_close = close[-longest - 1 : -1]
    true_low = np.minimum(low[-longest:], prev_close)
    true_high = np.maximum(high[-longest:], prev_close)
    buying = close[-longest:] - true_low
    ranges = true_high - true_low

    averages = []
    for p in periods:
        total_range = float(np.sum(ranges[-p:]))
        if total_range == 0.0:
            averages.append(0.5)
        else:
            averages.append(float(np.sum(buying[-p:])) / total_range)
    fast, mid, slow = averages
    return 100.0 * (4.0 * fast + 2.0 * mid + slow) / 7.0


def adx(
    high: np.ndarray, low: np.ndarray, close: np.ndarray, period: int = 14
) -> float:
    """Wilder average directional index in [0, 100]."""
    _require("adx", close, 2 * period)
    up = np.diff(high)
    down = -np.diff(low)
    plus_dm = np.where((up > down) & (up > 0), up, 0.0)
    minus_dm = np.where((down > up) & (down > 0), down, 0.0)
    true_range = np.maximum(high[1:], close[:-1]) - np.minimum(low[1:], close[:-1])

    # The smoothed true range cancels out of DX; it only gates the zero case.
    tr = _wilder(true_range, period)
    plus = _wilder(plus_dm, period)
    minus = _wilder(minus_dm, period)
    total = plus + minus
    dx = np.zeros_like(total)
    moving = (tr > 0.0) & (total > 0.0)
    dx[moving] = 100.0 * np.abs(plus[moving] - minus[moving]) / total[moving]
    return float(_wilder(dx, period)[-1])


def roc(close: np.ndarray, period: int = 10) -> float:
    """Rate of change in percent (unbounded)."""
    _require("roc", close, period + 1)
    base = float(close[-period - 1])
    return 100.0 * (float(close[-1]) - base) / base


def stochastic_k(
    high: np.ndarray, low: np.ndarray, close: np.ndarray, period: int = 14
) -> float:
    """Fast stochastic %K in [0, 100]; 50 when the window has zero range."""
    _require("stochastic_k", close, period)
    hh = float(np.max(high[-period:]))
    ll = float(np.min(low[-period:]))
    if hh == ll:
        return 50.0
    return 100.0 * (float(close[-1]) - ll) / (hh - ll)
