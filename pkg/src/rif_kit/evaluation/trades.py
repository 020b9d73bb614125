# src/rif_kit/evaluation/trades.py

from collections.abc import Sequence
from dataclasses import dataclass
from datetime import datetime

import numpy as np

from rif_kit.env import StepRecord
from rif_kit.errors import DataError


@dataclass(frozen=True)
class TradeRecord:
    """One round trip.

    Prices are the fills at the open after each decision. ``ret`` is the
    trade's summed reinforcement feedback over the entry fill price, so it
    is net of both commissions.
    """

    entry_time: datetime
    exit_time: datetime
    entry_price: float
    exit_price: float
    commission: float
    pnl: float
    ret: float

    @property
    def holding_minutes(self) -> int:
        return int((self.exit_time - self.entry_time).total_seconds() // 60)


def extract_trades(records: Sequence[StepRecord]) -> list[TradeRecord]:
    """One ``TradeRecord`` per 0 -> 1 ... 1 -> 0 sequence of a step log.

    Records must be grouped by day in decision order. A day that ends in a
    position, or a position change without a fill price, is malformed.
    """
    trades: list[TradeRecord] = []
    entry: StepRecord | None = None
    pnl = commission = 0.0
    previous: StepRecord | None = None

    for r in records:
        new_day = previous is None or r.date != previous.date
        if new_day:
            if entry is not None:
                raise DataError(f"malformed log: position open at end of {entry.date}")
            prior_position = 0
        else:
            assert previous is not None
            if r.t != previous.t + 1:
                raise DataError(
                    f"malformed log: step {r.t} follows {previous.t} on {r.date}"
                )
            prior_position = previous.position

        if r.position != prior_position and r.fill_price is None:
            raise DataError(
                f"malformed log: position change without fill at {r.timestamp}"
            )

        if prior_position == 0 and r.position == 1:
            entry, pnl, commission = r, 0.0, 0.0
        if entry is not None:
            pnl += r.r_rf
            commission += r.commission
        if prior_position == 1 and r.position == 0:
            assert entry is not None and entry.fill_price is not None
            assert r.fill_price is not None
            trades.append(
                TradeRecord(
                    entry_time=entry.timestamp,
                    exit_time=r.timestamp,
                    entry_price=entry.fill_price,
                    exit_price=r.fill_price,
                    commission=commission,
                    pnl=pnl,
                    ret=pnl / entry.fill_price,
                )
            )
            entry = None
        previous = r

    if entry is not None:
        raise DataError(f"malformed log: position open at end of {entry.date}")
    return trades


@dataclass(frozen=True)
class TradeStats:
    """Trade statistics in percent; holding period in minutes.

    An empty sign subset reports 0 and sets its ``no_*`` flag.
    """

    num_trades: int
    winrate: float
    mean_positive_return: float
    mean_negative_return: float
    avg_holding_minutes: float
    no_winners: bool = False
    no_losers: bool = False


def trade_statistics(trades: Sequence[TradeRecord]) -> TradeStats:
    if not trades:
        return TradeStats(0, 0.0, 0.0, 0.0, 0.0, no_winners=True, no_losers=True)
    returns = np.array([t.ret for t in trades])
    winners = returns[returns > 0]
    losers = returns[returns < 0]
    return TradeStats(
        num_trades=len(trades),
        winrate=100.0 * len(winners) / len(returns),
        mean_positive_return=100.0 * float(winners.mean()) if len(winners) else 0.0,
        mean_negative_return=100.0 * float(losers.mean()) if len(losers) else 0.0,
        avg_holding_minutes=float(np.mean([t.holding_minutes for t in trades])),
        no_winners=len(winners) == 0,
        no_losers=len(losers) == 0,
    )
