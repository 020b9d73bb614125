# src/rif_kit/ppo/update.py

import logging
from dataclasses import asdict, dataclass

import numpy as np

from rif_kit.errors import TrainingError
from rif_kit.neural import (
    AdamState,
    LossSpec,
    LossTerms,
    Minibatch,
    NetParams,
    adam_step,
    backward,
)

from .buffer import RolloutBuffer
from .config import PpoConfig

logger = logging.getLogger(__name__)


def clipped_surrogate(
    ratio: np.ndarray | float, advantage: np.ndarray | float, epsilon: float
) -> np.ndarray:
    """min(ratio * A, clip(ratio, 1 - eps, 1 + eps) * A), elementwise."""
    ratio = np.asarray(ratio, dtype=np.float64)
    advantage = np.asarray(advantage, dtype=np.float64)
    return np.minimum(
        ratio * advantage, np.clip(ratio, 1.0 - epsilon, 1.0 + epsilon) * advantage
    )


@dataclass(frozen=True)
class UpdateDiagnostics:
    """Minibatch means over one update."""

    policy_loss: float
    value_loss: float
    entropy: float
    approx_kl: float
    clip_fraction: float
    loss: float
    minibatches: int

    @classmethod
    def from_terms(cls, terms: list[LossTerms]) -> "UpdateDiagnostics":
        return cls(
            policy_loss=float(np.mean([t.policy_loss for t in terms])),
            value_loss=float(np.mean([t.value_loss for t in terms])),
            entropy=float(np.mean([t.entropy for t in terms])),
            approx_kl=float(np.mean([t.approx_kl for t in terms])),
            clip_fraction=float(np.mean([t.clip_fraction for t in terms])),
            loss=float(np.mean([t.loss for t in terms])),
            minibatches=len(terms),
        )


def ppo_update(
    params: NetParams,
    adam_state: AdamState,
    buffer: RolloutBuffer,
    advantages: np.ndarray,
    returns: np.ndarray,
    config: PpoConfig,
    rng: np.random.Generator,
) -> tuple[NetParams, UpdateDiagnostics]:
    """``config.epochs`` passes of shuffled minibatches over a full buffer.

    Raises ``TrainingError`` carrying the last diagnostics on a non-finite
    loss or gradient; ``params`` are left as they were before the failing
    minibatch.
    """
    if not buffer.is_full:
        raise ValueError(f"buffer holds {len(buffer)} of {buffer.capacity} steps")
    spec: LossSpec = config.loss_spec
    terms: list[LossTerms] = []
    for epoch in range(config.epochs):
        order = rng.permutation(buffer.capacity)
        for start in range(0, buffer.capacity, config.minibatch_size):
            idx = order[start : start + config.minibatch_size]
            batch = Minibatch(
                observations=buffer.observations[idx],
                actions=buffer.actions[idx],
                old_log_probs=buffer.log_probs[idx],
                advantages=advantages[idx],
                returns=returns[idx],
            )
            try:
                grads, step_terms = backward(params, batch, spec)
            except FloatingPointError as exc:
                diagnostics = (
                    asdict(UpdateDiagnostics.from_terms(terms)) if terms else {}
                )
                diagnostics["epoch"] = epoch
                raise TrainingError(f"update aborted: {exc}", diagnostics=diagnostics)
            params = adam_step(params, grads, adam_state)
            terms.append(step_terms)

    diagnostics = UpdateDiagnostics.from_terms(terms)
    logger.debug(
        "Update: policy %.4g value %.4g entropy %.4g kl %.3g clip %.3f",
        diagnostics.policy_loss,
        diagnostics.value_loss,
        diagnostics.entropy,
        diagnostics.approx_kl,
        diagnostics.clip_fraction,
    )
    return params, diagnostics
