# src/rif_kit/env/__init__.py

"""Episodic long/flat intraday environment and its reward signals.

Example:
    >>> from rif_kit.env import EnvConfig, FlatPolicy, TradingEnv, run_episodes
    >>> from rif_kit.market_data import SyntheticSpec, generate_synthetic
    >>>
    >>> days = generate_synthetic(SyntheticSpec(days=1))
    >>> records = run_episodes(TradingEnv(EnvConfig()), days, FlatPolicy())
    >>> len(records)
    387
"""

from .config import BPS, REWARD_MODES, EnvConfig, RewardMode
from .models import EnvState, Fill, StepOutcome, StepRecord
from .policies import (
    BuyAndHoldPolicy,
    FlatPolicy,
    GreedyPolicy,
    LabelFollowingPolicy,
    Policy,
    RandomPolicy,
    StochasticPolicy,
)
from .rewards import (
    Feedback,
    compute_feedback,
    execution_price,
    imitation_feedback,
    reinforcement_feedback,
)
from .runner import (
    STEP_LOG_COLUMNS,
    ReturnBase,
    daily_returns,
    day_base_price,
    read_step_log,
    records_frame,
    run_episode,
    run_episodes,
    write_step_log,
)
from .trading_env import TradingEnv

__all__ = [
    # Config
    "EnvConfig",
    "RewardMode",
    "REWARD_MODES",
    "BPS",
    # Types
    "EnvState",
    "StepOutcome",
    "StepRecord",
    "Fill",
    "Feedback",
    # Rewards
    "execution_price",
    "reinforcement_feedback",
    "imitation_feedback",
    "compute_feedback",
    # Environment
    "TradingEnv",
    # Policies
    "Policy",
    "GreedyPolicy",
    "StochasticPolicy",
    "RandomPolicy",
    "BuyAndHoldPolicy",
    "FlatPolicy",
    "LabelFollowingPolicy",
    # Episodes
    "run_episode",
    "run_episodes",
    "records_frame",
    "daily_returns",
    "day_base_price",
    "ReturnBase",
    "STEP_LOG_COLUMNS",
    "write_step_log",
    "read_step_log",
]
