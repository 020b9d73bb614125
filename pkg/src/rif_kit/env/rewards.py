# src/rif_kit/env/rewards.py

"""Per-step reward signals in currency units per unit position.

Values are computed as exact rationals of the float prices and commission
so that ``combined == reinforcement - imitation`` holds with no rounding.
The float views keep the same identities bit-exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from rif_kit.market_data import MinuteBar


def _require_next(next_bar: MinuteBar | None) -> MinuteBar:
    if next_bar is None:
        raise ValueError("end of day: no bar t+1 to execute against")
    return next_bar


def _execution_price(changed: bool, bar: MinuteBar, next_bar: MinuteBar) -> Fraction:
    return Fraction(next_bar.open) if changed else Fraction(bar.close)


def execution_price(
    changed: bool, bar: MinuteBar, next_bar: MinuteBar | None
) -> float:
    """Open of bar t+1 when the position changed, else close of bar t."""
    return float(_execution_price(changed, bar, _require_next(next_bar)))


def _check_binary(name: str, *values: int) -> None:
    if any(v not in (0, 1) for v in values):
        raise ValueError(f"{name} must be 0 or 1")


def _profit(
    held: int, previous: int, bar: MinuteBar, next_bar: MinuteBar
) -> Fraction:
    if held == 0:
        return Fraction(0)
    return Fraction(next_bar.close) - _execution_price(held != previous, bar, next_bar)


def _commission(
    action: int, previous: int, next_bar: MinuteBar, commission: float
) -> Fraction:
    return Fraction(commission) * Fraction(next_bar.open) * abs(action - previous)


# Exported floats sit on a 2**-36 grid; sums and differences of grid values
# below 2**16 in magnitude are exact in 64-bit floats.
_GRID_BITS = 36


def _on_grid(value: Fraction) -> float:
    return math.ldexp(round(value * 2**_GRID_BITS), -_GRID_BITS)


@dataclass(frozen=True)
class Feedback:
    """Exact per-step rewards.

    The ``r_*`` floats are built from the grid-rounded profit and commission,
    so ``r_rif == r_rf - r_if`` holds in floats and a step that matches the
    label has ``r_rif == -cost``.
    """

    reinforcement: Fraction
    imitation: Fraction
    commission: Fraction

    @property
    def combined(self) -> Fraction:
        return self.reinforcement - self.imitation

    @property
    def r_rf(self) -> float:
        return _on_grid(self.reinforcement + self.commission) - self.cost

    @property
    def r_if(self) -> float:
        return _on_grid(self.imitation)

    @property
    def r_rif(self) -> float:
        return self.r_rf - self.r_if

    @property
    def cost(self) -> float:
        return _on_grid(self.commission)


def compute_feedback(
    action: int,
    previous_action: int,
    label: int,
    previous_label: int,
    bar: MinuteBar,
    next_bar: MinuteBar | None,
    commission: float,
) -> Feedback:
    _check_binary("actions", action, previous_action)
    _check_binary("labels", label, previous_label)
    if commission < 0:
        raise ValueError("commission must be >= 0")
    nxt = _require_next(next_bar)
    cost = _commission(action, previous_action, nxt, commission)
    return Feedback(
        reinforcement=_profit(action, previous_action, bar, nxt) - cost,
        imitation=_profit(label, previous_label, bar, nxt),
        commission=cost,
    )


def reinforcement_feedback(
    action: int,
    previous_action: int,
    bar: MinuteBar,
    next_bar: MinuteBar | None,
    commission: float,
) -> float:
    """a_t * (C[t+1] - p_exec) - commission * O[t+1] * |a_t - a_{t-1}|."""
    return compute_feedback(
        action, previous_action, 0, 0, bar, next_bar, commission
    ).r_rf


def imitation_feedback(
    label: int,
    previous_label: int,
    bar: MinuteBar,
    next_bar: MinuteBar | None,
) -> float:
    """y_t * (C[t+1] - p_exec). No commission term."""
    return compute_feedback(0, 0, label, previous_label, bar, next_bar, 0.0).r_if
