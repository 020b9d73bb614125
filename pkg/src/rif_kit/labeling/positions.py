# src/rif_kit/labeling/positions.py

import math
from collections.abc import Sequence

import numpy as np

from .models import Position


def position_return(entry_price: float, exit_price: float, commission: float) -> float:
    """Return of one long position paying ``commission`` on entry only."""
    if not (entry_price > 0 and exit_price > 0):
        raise ValueError("prices must be > 0")
    if commission < 0:
        raise ValueError("commission must be >= 0")
    cost = entry_price * (1.0 + commission)
    return (exit_price - cost) / cost


def _check_lengths(prices: Sequence[float], labels: Sequence[int]) -> None:
    if len(prices) != len(labels):
        raise ValueError(
            f"length mismatch: {len(prices)} prices, {len(labels)} labels"
        )


def extract_positions(
    prices: Sequence[float] | np.ndarray,
    labels: Sequence[int] | np.ndarray,
    commission: float = 0.0,
) -> list[Position]:
    """One ``Position`` per maximal run of 1s.

    A run starting at ``i`` enters at ``prices[i]`` and exits at the first
    following 0-label; a run still open at the end exits at the last price.
    """
    _check_lengths(prices, labels)
    positions: list[Position] = []
    entry: int | None = None
    last = len(labels) - 1
    for t, label in enumerate(labels):
        if label == 1 and entry is None:
            entry = t
        elif label == 0 and entry is not None:
            positions.append(_position(prices, entry, t, commission, open_at_end=False))
            entry = None
    if entry is not None:
        positions.append(_position(prices, entry, last, commission, open_at_end=True))
    return positions


def _position(
    prices: Sequence[float] | np.ndarray,
    entry: int,
    exit_: int,
    commission: float,
    open_at_end: bool,
) -> Position:
    entry_price, exit_price = float(prices[entry]), float(prices[exit_])
    return Position(
        entry_index=entry,
        exit_index=exit_,
        entry_price=entry_price,
        exit_price=exit_price,
        ret=position_return(entry_price, exit_price, commission),
        open_at_end=open_at_end,
    )


def cumulative_return(
    prices: Sequence[float] | np.ndarray,
    labels: Sequence[int] | np.ndarray,
    commission: float,
) -> float:
    """Compounded return of every labelled position: prod(1 + r_i) - 1."""
    returns = [p.ret for p in extract_positions(prices, labels, commission)]
    for r in returns:
        assert r > -1.0, "position return <= -1 with positive prices"
    return math.prod(1.0 + r for r in returns) - 1.0
