# src/rif_kit/neural/network.py

from dataclasses import dataclass

import numpy as np

from .params import OBSERVATION_DIM, NetParams


@dataclass(frozen=True)
class ForwardOutput:
    """Batched forward pass. ``probabilities`` is (N, 2), ``values`` is (N,).

    The remaining fields are activations cached for ``backward``.
    """

    probabilities: np.ndarray
    log_probabilities: np.ndarray
    values: np.ndarray
    inputs: np.ndarray
    hidden1: np.ndarray
    hidden2: np.ndarray


def _as_batch(observations: np.ndarray) -> np.ndarray:
    x = np.asarray(observations, dtype=np.float64)
    if x.ndim == 1:
        x = x[None, :]
    if x.ndim != 2 or x.shape[1] != OBSERVATION_DIM:
        raise ValueError(
            f"observation dimension must be {OBSERVATION_DIM}, got shape {x.shape}"
        )
    if not np.all(np.isfinite(x)):
        raise ValueError("observation must be finite")
    return x


def log_softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=-1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def forward(params: NetParams, observations: np.ndarray) -> ForwardOutput:
    """Accepts one observation (8,) or a batch (N, 8)."""
    x = _as_batch(observations)
    h1 = np.tanh(x @ params.w1 + params.b1)
    h2 = np.tanh(h1 @ params.w2 + params.b2)
    log_p = log_softmax(h2 @ params.w_policy + params.b_policy)
    values = (h2 @ params.w_value + params.b_value)[:, 0]
    return ForwardOutput(
        probabilities=np.exp(log_p),
        log_probabilities=log_p,
        values=values,
        inputs=x,
        hidden1=h1,
        hidden2=h2,
    )


def sample_action(probabilities: np.ndarray, rng: np.random.Generator) -> int:
    """Inverse-CDF draw from a 2-class distribution."""
    return int(rng.random() >= probabilities[0])
