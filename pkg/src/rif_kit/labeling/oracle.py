# src/rif_kit/labeling/oracle.py

import logging
import math
from collections.abc import Iterable, Sequence
from datetime import date
from time import monotonic

import numpy as np

from rif_kit.market_data import SessionWindow, TradingDay
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook

from .models import DpTables, LabelSeries
from .positions import extract_positions

logger = logging.getLogger(__name__)

FLAT, LONG = 0, 1


def _validate(prices: np.ndarray, commission: float, terminal_label: int) -> None:
    if prices.ndim != 1 or len(prices) < 2:
        raise ValueError("series too short: need at least 2 prices")
    if not np.all(np.isfinite(prices)) or np.any(prices <= 0):
        raise ValueError("prices must be finite and > 0")
    if commission < 0:
        raise ValueError("commission must be >= 0")
    if terminal_label not in (FLAT, LONG):
        raise ValueError("terminal_label must be 0 or 1")


def build_dp_tables(
    prices: Sequence[float] | np.ndarray,
    commission: float,
    terminal_label: int = FLAT,
) -> DpTables:
    """Forward pass of the oracle labeler in log-growth space.

    Opening a position costs ``-log(1 + commission)``; holding and closing
    both accrue ``log(p[t+1] / p[t])``; staying flat accrues nothing.
    """
    p = np.asarray(prices, dtype=np.float64)
    _validate(p, commission, terminal_label)
    n = len(p)
    entry_cost = -math.log1p(commission)
    step = np.diff(np.log(p))

    transition = np.zeros((n - 1, 2, 2))
    transition[:, FLAT, LONG] = entry_cost
    transition[:, LONG, LONG] = step
    transition[:, LONG, FLAT] = step

    state = np.empty((2, n))
    state[:, 0] = (0.0, entry_cost)
    for t in range(n - 1):
        # state[j, t+1] = max_i state[i, t] + transition[t, i, j]
        state[:, t + 1] = np.max(state[:, t, None] + transition[t], axis=0)
    state[1 - terminal_label, -1] = -np.inf
    return DpTables(state=state, transition=transition)


def oracle_labels(
    prices: Sequence[float] | np.ndarray,
    commission: float,
    terminal_label: int = FLAT,
) -> LabelSeries:
    """Label series maximising the compounded commission-adjusted return.

    Backtracking prefers the flat label on exact ties.
    """
    tables = build_dp_tables(prices, commission, terminal_label)
    state, transition = tables.state, tables.transition
    n = state.shape[1]

    labels = np.empty(n, dtype=np.int8)
    labels[-1] = terminal_label
    for t in range(n - 2, -1, -1):
        candidates = state[:, t] + transition[t, :, labels[t + 1]]
        labels[t] = int(np.argmax(candidates))
    labels.setflags(write=False)
    return LabelSeries(
        labels=labels, commission=commission, terminal_label=terminal_label
    )


def label_day(
    day: TradingDay,
    commission: float,
    session: SessionWindow = SessionWindow(),
    terminal_label: int = FLAT,
) -> LabelSeries:
    """Oracle labels on the closes of the tradable span of ``day``.

    Index ``k`` of the result is the label for decision minute
    ``session.first_decision_index + k``; the last label falls on the
    forced exit minute.
    """
    if day.incomplete:
        raise ValueError(f"day {day.date} is incomplete")
    if len(day) < session.bars_per_session:
        raise ValueError(
            f"day {day.date} has {len(day)} bars, need {session.bars_per_session}"
        )
    span = slice(session.first_decision_index, session.forced_exit_index + 1)
    return oracle_labels(day.closes[span], commission, terminal_label)


def label_days(
    days: Iterable[TradingDay],
    commission: float,
    session: SessionWindow = SessionWindow(),
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> dict[date, LabelSeries]:
    """Label each day independently; keyed by ``day.date``."""
    start = monotonic()
    labelled: dict[date, LabelSeries] = {}
    positions = 0
    span = slice(session.first_decision_index, session.forced_exit_index + 1)
    for day in days:
        series = label_day(day, commission, session)
        labelled[day.date] = series
        positions += len(
            extract_positions(day.closes[span], series.labels, commission)
        )
        logger.debug("Labelled %s: %d long minutes", day.date, int(series.labels.sum()))

    elapsed_ms = 1000 * (monotonic() - start)
    metrics_hook.record_latency(names.LABELING_DURATION, elapsed_ms)
    metrics_hook.increment(names.LABELING_DAYS_TOTAL, len(labelled))
    metrics_hook.increment(names.LABELING_POSITIONS_TOTAL, positions)
    logger.info(
        "Labelled %d days at %.2f bps: %d positions",
        len(labelled),
        commission * 1e4,
        positions,
    )
    return labelled
