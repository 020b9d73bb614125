# src/rif_kit/env/runner.py

import logging
from collections.abc import Iterable, Sequence
from dataclasses import asdict, fields
from pathlib import Path
from typing import Literal

import numpy as np
import pandas as pd

from rif_kit.errors import DataError
from rif_kit.market_data import SessionWindow, TradingDay

from .models import StepRecord
from .policies import Policy
from .trading_env import TradingEnv

logger = logging.getLogger(__name__)

ReturnBase = Literal["decision_open", "execution_open"]
STEP_LOG_COLUMNS = tuple(f.name for f in fields(StepRecord))


def run_episode(env: TradingEnv, day: TradingDay, policy: Policy) -> list[StepRecord]:
    """Play one day with ``policy``; one record per decision minute."""
    state, observation = env.reset(day)
    records: list[StepRecord] = []
    while True:
        t = state.t
        outcome = env.step(policy.act(observation, state))
        records.append(
            StepRecord(
                date=day.date,
                timestamp=day.bars[t].timestamp,
                t=t,
                action=outcome.action,
                label=outcome.label,
                position=outcome.action,
                r_rf=outcome.r_rf,
                r_if=outcome.r_if,
                r_rif=outcome.r_rif,
                commission=outcome.feedback.cost,
                fill_price=outcome.fill.price if outcome.fill else None,
            )
        )
        if outcome.done:
            return records
        state = env.state
        assert outcome.observation is not None
        observation = outcome.observation


def run_episodes(
    env: TradingEnv, days: Iterable[TradingDay], policy: Policy
) -> list[StepRecord]:
    records: list[StepRecord] = []
    n_days = 0
    for day in days:
        records.extend(run_episode(env, day, policy))
        n_days += 1
    logger.info(
        "Ran %s policy over %d days (%d steps)", policy.name, n_days, len(records)
    )
    return records


def records_frame(records: Sequence[StepRecord]) -> pd.DataFrame:
    if not records:
        return pd.DataFrame(columns=list(STEP_LOG_COLUMNS))
    return pd.DataFrame([asdict(r) for r in records], columns=list(STEP_LOG_COLUMNS))


def day_base_price(
    day: TradingDay,
    session: SessionWindow = SessionWindow(),
    base: ReturnBase = "decision_open",
) -> float:
    """Unit-position denominator of a day's return."""
    if base == "decision_open":
        return float(day.opens[session.first_decision_index])
    if base == "execution_open":
        return float(day.opens[session.first_decision_index + 1])
    raise ValueError(f"Unknown return base: {base}")


def daily_returns(
    records: Sequence[StepRecord],
    days: Sequence[TradingDay],
    session: SessionWindow = SessionWindow(),
    base: ReturnBase = "decision_open",
) -> pd.Series:
    """Per-day strategy return: sum of r_rf divided by the day's base price.

    Indexed by date in the order of ``days``; a day with no records returns 0.
    """
    pnl: dict = {}
    for r in records:
        pnl[r.date] = pnl.get(r.date, 0.0) + r.r_rf
    values = [pnl.get(d.date, 0.0) / day_base_price(d, session, base) for d in days]
    return pd.Series(
        values, index=[d.date for d in days], name="return", dtype=np.float64
    )


def write_step_log(
    records: Sequence[StepRecord], path: str | Path, header: str | None = None
) -> Path:
    """CSV with header ``STEP_LOG_COLUMNS``; ``header`` becomes a leading
    ``# ...`` comment line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = records_frame(records)
    frame["timestamp"] = [r.timestamp.strftime("%Y-%m-%dT%H:%M") for r in records]
    with open(path, "w", encoding="utf-8", newline="") as f:
        if header is not None:
            f.write(f"# {header}\n")
        frame.to_csv(f, index=False, lineterminator="\n")
    logger.debug("Wrote %d step records to %s", len(records), path)
    return path


def read_step_log(path: str | Path) -> list[StepRecord]:
    path = Path(path)
    if not path.is_file():
        raise DataError(f"step log not found: {path}")
    frame = pd.read_csv(path, comment="#", float_precision="round_trip")
    if tuple(frame.columns) != STEP_LOG_COLUMNS:
        raise DataError(f"expected step-log header {','.join(STEP_LOG_COLUMNS)}")
    records = []
    for row in frame.itertuples(index=False):
        timestamp = pd.Timestamp(row.timestamp).to_pydatetime()
        records.append(
            StepRecord(
                date=timestamp.date(),
                timestamp=timestamp,
                t=int(row.t),
                action=int(row.action),
                label=int(row.label),
                position=int(row.position),
                r_rf=float(row.r_rf),
                r_if=float(row.r_if),
                r_rif=float(row.r_rif),
                commission=float(row.commission),
                fill_price=None if pd.isna(row.fill_price) else float(row.fill_price),
            )
        )
    return records
