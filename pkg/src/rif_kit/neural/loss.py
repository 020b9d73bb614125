# src/rif_kit/neural/loss.py

import logging
from dataclasses import dataclass

import numpy as np

from .network import ForwardOutput, forward
from .params import NetParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LossSpec:
    """Coefficients of the PPO composite loss:
    -clipped_surrogate + value_coef * MSE - entropy_coef * entropy."""

    clip_epsilon: float = 0.2
    value_coef: float = 0.5
    entropy_coef: float = 0.01

    def __post_init__(self) -> None:
        if not 0 < self.clip_epsilon < 1:
            raise ValueError("clip_epsilon must be in (0, 1)")
        if self.value_coef < 0:
            raise ValueError("value_coef must be >= 0")
        if self.entropy_coef < 0:
            raise ValueError("entropy_coef must be >= 0")


@dataclass(frozen=True)
class Minibatch:
    observations: np.ndarray  # (N, 8)
    actions: np.ndarray  # (N,) int
    old_log_probs: np.ndarray  # (N,) behaviour-policy log pi(a|s)
    advantages: np.ndarray  # (N,)
    returns: np.ndarray  # (N,) value targets

    def __post_init__(self) -> None:
        n = len(self.observations)
        if n == 0:
            raise ValueError("minibatch must not be empty")
        for name in ("actions", "old_log_probs", "advantages", "returns"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"{name} length does not match observations")

    def __len__(self) -> int:
        return len(self.observations)


@dataclass(frozen=True)
class LossTerms:
    loss: float
    policy_loss: float
    value_loss: float
    entropy: float
    approx_kl: float
    clip_fraction: float


@dataclass(frozen=True)
class _Intermediates:
    out: ForwardOutput
    ratio: np.ndarray
    unclipped: np.ndarray
    clipped: np.ndarray
    entropy: np.ndarray
    terms: LossTerms


def _evaluate(params: NetParams, batch: Minibatch, spec: LossSpec) -> _Intermediates:
    out = forward(params, batch.observations)
    rows = np.arange(len(batch))
    log_p_a = out.log_probabilities[rows, batch.actions]
    log_ratio = log_p_a - batch.old_log_probs
    ratio = np.exp(log_ratio)
    adv = batch.advantages
    eps = spec.clip_epsilon
    unclipped = ratio * adv
    clipped = np.clip(ratio, 1.0 - eps, 1.0 + eps) * adv
    entropy = -(out.probabilities * out.log_probabilities).sum(axis=1)

    policy_loss = -float(np.mean(np.minimum(unclipped, clipped)))
    value_loss = float(np.mean((out.values - batch.returns) ** 2))
    mean_entropy = float(np.mean(entropy))
    loss = policy_loss + spec.value_coef * value_loss - spec.entropy_coef * mean_entropy
    terms = LossTerms(
        loss=loss,
        policy_loss=policy_loss,
        value_loss=value_loss,
        entropy=mean_entropy,
        approx_kl=float(np.mean((ratio - 1.0) - log_ratio)),
        clip_fraction=float(np.mean(np.abs(ratio - 1.0) > eps)),
    )
    return _Intermediates(out, ratio, unclipped, clipped, entropy, terms)


def composite_loss(
    params: NetParams, batch: Minibatch, spec: LossSpec = LossSpec()
) -> tuple[float, LossTerms]:
    terms = _evaluate(params, batch, spec).terms
    return terms.loss, terms


def backward(
    params: NetParams, batch: Minibatch, spec: LossSpec = LossSpec()
) -> tuple[NetParams, LossTerms]:
    """Analytic gradient of ``composite_loss`` with respect to every parameter.

    A sample whose clipped term is selected by the min contributes no
    policy gradient.
    """
    it = _evaluate(params, batch, spec)
    out = it.out
    n = len(batch)
    if not np.isfinite(it.terms.loss):
        raise FloatingPointError(f"non-finite loss: {it.terms.loss}")

    onehot = np.zeros_like(out.probabilities)
    onehot[np.arange(n), batch.actions] = 1.0
    d_surrogate = np.where(it.unclipped <= it.clipped, batch.advantages, 0.0)
    d_logits = (
        -(d_surrogate * it.ratio)[:, None] * (onehot - out.probabilities)
        + spec.entropy_coef
        * out.probabilities
        * (out.log_probabilities + it.entropy[:, None])
    ) / n
    d_values = (2.0 * spec.value_coef / n) * (out.values - batch.returns)[:, None]

    h1, h2 = out.hidden1, out.hidden2
    d_h2 = d_logits @ params.w_policy.T + d_values @ params.w_value.T
    d_a2 = d_h2 * (1.0 - h2**2)
    d_h1 = d_a2 @ params.w2.T
    d_a1 = d_h1 * (1.0 - h1**2)

    grads = NetParams(
        w1=out.inputs.T @ d_a1,
        b1=d_a1.sum(axis=0),
        w2=h1.T @ d_a2,
        b2=d_a2.sum(axis=0),
        w_policy=h2.T @ d_logits,
        b_policy=d_logits.sum(axis=0),
        w_value=h2.T @ d_values,
        b_value=d_values.sum(axis=0),
    )
    if not grads.is_finite():
        raise FloatingPointError("non-finite gradient")
    return grads, it.terms


def gradient_check(
    params: NetParams,
    batch: Minibatch,
    spec: LossSpec,
    rng: np.random.Generator,
    entries: int = 100,
    h: float = 1e-6,
    floor: float = 1e-4,
) -> float:
    """Max relative error between analytic and central-difference gradients
    over ``entries`` random parameter entries.

    Relative error is |a - n| / max(|a|, |n|, floor).
    """
    analytic, _ = backward(params, batch, spec)
    analytic_arrays = analytic.as_dict()
    names = list(analytic_arrays)
    worst = 0.0
    for _ in range(entries):
        name = names[int(rng.integers(len(names)))]
        index = tuple(int(rng.integers(d)) for d in analytic_arrays[name].shape)

        arrays = params.copy().as_dict()
        original = arrays[name][index]
        arrays[name][index] = original + h
        plus, _ = composite_loss(NetParams.from_dict(arrays), batch, spec)
        arrays[name][index] = original - h
        minus, _ = composite_loss(NetParams.from_dict(arrays), batch, spec)

        numeric = (plus - minus) / (2.0 * h)
        a = float(analytic_arrays[name][index])
        error = abs(a - numeric) / max(abs(a), abs(numeric), floor)
        worst = max(worst, error)
    logger.debug(
        "Gradient check over %d entries: max relative error %.3g", entries, worst
    )
    return worst
