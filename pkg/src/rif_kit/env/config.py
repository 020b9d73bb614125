# src/rif_kit/env/config.py

from dataclasses import dataclass, field
from typing import Literal

from rif_kit.indicators import IndicatorConfig
from rif_kit.market_data import SessionWindow

RewardMode = Literal["RF", "RIF"]
REWARD_MODES: tuple[RewardMode, ...] = ("RF", "RIF")

BPS = 1e-4


@dataclass(frozen=True)
class EnvConfig:
    """Episode rules for the long/flat intraday environment.

    Commissions are fractions of the fill price: ``trading_commission`` (phi)
    is what the agent pays per unit traded, ``expert_commission`` (theta)
    only shapes the oracle labels. ``reward_mode`` picks the signal the
    trainer consumes; both are always computed.
    """

    trading_commission: float = 1 * BPS
    expert_commission: float = 3 * BPS
    reward_mode: RewardMode = "RIF"
    charge_forced_exit_commission: bool = True
    session: SessionWindow = field(default_factory=SessionWindow)
    indicators: IndicatorConfig = field(default_factory=IndicatorConfig)

    def __post_init__(self) -> None:
        if self.trading_commission < 0:
            raise ValueError("trading_commission must be >= 0")
        if self.expert_commission < 0:
            raise ValueError("expert_commission must be >= 0")
        if self.reward_mode not in REWARD_MODES:
            raise ValueError(
                f"Unknown reward mode: {self.reward_mode}. Valid: {REWARD_MODES}"
            )
        window = self.session.lookback + 1
        if self.indicators.required_bars() > window:
            raise ValueError(
                f"indicators need {self.indicators.required_bars()} bars, "
                f"the lookback window holds {window}"
            )
