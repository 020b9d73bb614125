from collections.abc import Callable, Sequence
from datetime import date, datetime, timedelta

import numpy as np
import pytest

from rif_kit.market_data import (
    MinuteBar,
    SessionWindow,
    SyntheticSpec,
    TradingDay,
    generate_synthetic,
)

DayFactory = Callable[..., TradingDay]


def build_day(
    closes: Sequence[float],
    day: date = date(2024, 1, 2),
    opens: Sequence[float] | None = None,
    session: SessionWindow = SessionWindow(),
) -> TradingDay:
    """A complete session whose bars open at the previous close unless ``opens`` is given."""
    closes = [float(c) for c in closes]
    if opens is None:
        opens = [closes[0], *closes[:-1]]
    start = datetime.combine(day, session.open_time)
    bars = tuple(
        MinuteBar(
            start + timedelta(minutes=i),
            float(o),
            max(float(o), c),
            min(float(o), c),
            c,
            1000,
        )
        for i, (o, c) in enumerate(zip(opens, closes))
    )
    return TradingDay(day, bars)


def bar(open_: float, close: float, minute: int = 0) -> MinuteBar:
    ts = datetime(2024, 1, 2, 9, 30) + timedelta(minutes=minute)
    return MinuteBar(ts, open_, max(open_, close), min(open_, close), close, 100)


@pytest.fixture
def make_day() -> DayFactory:
    return build_day


@pytest.fixture
def session() -> SessionWindow:
    return SessionWindow()


@pytest.fixture(scope="session")
def random_walk_days() -> list[TradingDay]:
    """Three seeded random-walk sessions, shared read-only across tests."""
    return generate_synthetic(SyntheticSpec(kind="random-walk", days=3, seed=11))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
