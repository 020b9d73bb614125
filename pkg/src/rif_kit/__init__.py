# Errors
from .errors import ConfigError, DataError, RifKitError, TrainingError

# Environment
from .env import EnvConfig, StepOutcome, StepRecord, TradingEnv, run_episodes

# Evaluation
from .evaluation import (
    BacktestReport,
    ReturnStats,
    TradeStats,
    grid_search,
    make_windows,
    return_statistics,
    trade_statistics,
)

# Indicators
from .indicators import IndicatorConfig, build_observation

# Labeling
from .labeling import LabelSeries, cumulative_return, oracle_labels

# Market data
from .market_data import MinuteBar, SessionWindow, TradingDay, load_days

# Neural
from .neural import NetParams, forward, init_params

# Observability
from .observability import MetricsHook, NoOpMetricsHook

# PPO
from .ppo import PpoConfig, TrainResult, train
