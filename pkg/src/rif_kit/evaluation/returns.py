# src/rif_kit/evaluation/returns.py

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import pandas as pd

TRADING_DAYS_PER_YEAR = 252


@dataclass(frozen=True)
class ReturnStats:
    """Annualised mean and volatility, max drawdown, all in percent.

    ``sharpe`` is None when the daily returns have zero variance.
    """

    mean_return: float
    volatility: float
    max_drawdown: float
    sharpe: float | None


def max_drawdown(daily: np.ndarray) -> float:
    """Largest peak-to-trough decline of the compounded equity curve
    starting at 1.0, as a fraction."""
    equity = np.concatenate(([1.0], np.cumprod(1.0 + daily)))
    peaks = np.maximum.accumulate(equity)
    return float(np.max(1.0 - equity / peaks))


def return_statistics(
    daily: Sequence[float] | np.ndarray | pd.Series,
    periods_per_year: int = TRADING_DAYS_PER_YEAR,
) -> ReturnStats:
    r = np.asarray(daily, dtype=np.float64)
    if len(r) < 2:
        raise ValueError(f"need at least 2 daily returns, got {len(r)}")
    mean = periods_per_year * float(np.mean(r))
    if np.ptp(r) == 0:
        volatility, sharpe = 0.0, None
    else:
        volatility = float(np.sqrt(periods_per_year) * np.std(r, ddof=1))
        sharpe = mean / volatility
    return ReturnStats(
        mean_return=100.0 * mean,
        volatility=100.0 * volatility,
        max_drawdown=100.0 * max_drawdown(r),
        sharpe=sharpe,
    )
