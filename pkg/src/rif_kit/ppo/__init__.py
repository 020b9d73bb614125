# src/rif_kit/ppo/__init__.py

"""PPO trainer for the intraday environment.

Example:
    >>> from rif_kit.ppo import PpoConfig, train
    >>>
    >>> result = train(train_days, validation_days, seed=7)  # doctest: +SKIP
    >>> result.best_validation_return  # doctest: +SKIP
"""

from .advantages import compute_advantages, gae, normalize_advantages
from .buffer import RolloutBuffer
from .config import PpoConfig
from .rollout import EpisodeStream, collect_rollout
from .trainer import (
    EarlyStopping,
    TrainRecord,
    TrainResult,
    greedy_return,
    history_frame,
    train,
    validation_env,
    validation_return,
    write_history,
)
from .update import UpdateDiagnostics, clipped_surrogate, ppo_update

__all__ = [
    # Config
    "PpoConfig",
    # Rollouts
    "RolloutBuffer",
    "EpisodeStream",
    "collect_rollout",
    # Advantages
    "gae",
    "normalize_advantages",
    "compute_advantages",
    # Update
    "clipped_surrogate",
    "ppo_update",
    "UpdateDiagnostics",
    # Training
    "EarlyStopping",
    "TrainRecord",
    "TrainResult",
    "train",
    "validation_return",
    "validation_env",
    "greedy_return",
    "history_frame",
    "write_history",
]
