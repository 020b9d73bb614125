# src/rif_kit/ppo/advantages.py

import logging

import numpy as np

from .buffer import RolloutBuffer

logger = logging.getLogger(__name__)


def gae(
    rewards: np.ndarray,
    values: np.ndarray,
    dones: np.ndarray,
    last_value: float = 0.0,
    gamma: float = 1.0,
    lam: float = 0.95,
) -> tuple[np.ndarray, np.ndarray]:
    """Generalized advantage estimates and return targets.

    ``last_value`` bootstraps the step after the final one when it is not
    terminal. Returns ``(advantages, advantages + values)``.
    """
    n = len(rewards)
    if not (len(values) == len(dones) == n):
        raise ValueError("rewards, values and dones must have equal length")
    advantages = np.zeros(n)
    running = 0.0
    for i in range(n - 1, -1, -1):
        nonterminal = 0.0 if dones[i] else 1.0
        next_value = last_value if i == n - 1 else values[i + 1]
        delta = rewards[i] + gamma * next_value * nonterminal - values[i]
        running = delta + gamma * lam * nonterminal * running
        advantages[i] = running
    return advantages, advantages + values


def normalize_advantages(advantages: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Zero mean, unit (population) variance; returned unchanged when the
    spread is degenerate."""
    std = float(np.std(advantages))
    if not std > tol:
        logger.warning("Advantage std %.3g is degenerate; skipping normalisation", std)
        return advantages
    return (advantages - np.mean(advantages)) / std


def compute_advantages(
    buffer: RolloutBuffer,
    gamma: float = 1.0,
    lam: float = 0.95,
    normalize: bool = True,
) -> tuple[np.ndarray, np.ndarray]:
    if not buffer.is_full:
        raise ValueError(f"buffer holds {len(buffer)} of {buffer.capacity} steps")
    last_value = buffer.bootstrap_value if buffer.truncated else 0.0
    advantages, returns = gae(
        buffer.rewards, buffer.values, buffer.dones, last_value, gamma, lam
    )
    if normalize:
        advantages = normalize_advantages(advantages)
    return advantages, returns
