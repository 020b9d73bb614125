# src/rif_kit/neural/params.py

import dataclasses
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

OBSERVATION_DIM = 8
HIDDEN_SIZES = (64, 32)
N_ACTIONS = 2

PARAM_SHAPES: dict[str, tuple[int, ...]] = {
    "w1": (OBSERVATION_DIM, HIDDEN_SIZES[0]),
    "b1": (HIDDEN_SIZES[0],),
    "w2": (HIDDEN_SIZES[0], HIDDEN_SIZES[1]),
    "b2": (HIDDEN_SIZES[1],),
    "w_policy": (HIDDEN_SIZES[1], N_ACTIONS),
    "b_policy": (N_ACTIONS,),
    "w_value": (HIDDEN_SIZES[1], 1),
    "b_value": (1,),
}


@dataclass(frozen=True)
class NetParams:
    """Actor-critic weights: shared tanh trunk 8-64-32, policy head 32-2,
    value head 32-1. Weights are (fan_in, fan_out); all float64.

    Also used to hold gradients and Adam moments, which share the shapes.
    """

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: np.ndarray
    w_policy: np.ndarray
    b_policy: np.ndarray
    w_value: np.ndarray
    b_value: np.ndarray

    def __post_init__(self) -> None:
        for name, expected in PARAM_SHAPES.items():
            value = getattr(self, name)
            if value.shape != expected:
                raise ValueError(
                    f"shape mismatch for {name}: expected {expected}, got {value.shape}"
                )

    def as_dict(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in PARAM_SHAPES}

    @classmethod
    def from_dict(cls, arrays: dict[str, np.ndarray]) -> "NetParams":
        missing = set(PARAM_SHAPES) - set(arrays)
        if missing:
            raise KeyError(f"missing parameter arrays: {sorted(missing)}")
        return cls(
            **{
                name: np.asarray(arrays[name], dtype=np.float64)
                for name in PARAM_SHAPES
            }
        )

    @classmethod
    def zeros(cls) -> "NetParams":
        return cls(**{name: np.zeros(shape) for name, shape in PARAM_SHAPES.items()})

    def map(self, fn: Callable[[np.ndarray], np.ndarray]) -> "NetParams":
        mapped = {k: fn(v) for k, v in self.as_dict().items()}
        return dataclasses.replace(self, **mapped)

    def copy(self) -> "NetParams":
        return self.map(np.copy)

    def is_finite(self) -> bool:
        return all(bool(np.all(np.isfinite(v))) for v in self.as_dict().values())

    def size(self) -> int:
        return sum(v.size for v in self.as_dict().values())


def _orthogonal(rng: np.random.Generator, name: str, gain: float) -> np.ndarray:
    rows, cols = PARAM_SHAPES[name]
    a = rng.standard_normal((max(rows, cols), min(rows, cols)))
    q, r = np.linalg.qr(a)
    q *= np.sign(np.diag(r))
    if rows < cols:
        q = q.T
    return gain * q[:rows, :cols]


def init_params(seed: int) -> NetParams:
    """Orthogonal weights (gain sqrt(2) trunk, 0.01 policy head, 1.0 value
    head), zero biases. Same seed, same parameters."""
    rng = np.random.default_rng(seed)
    trunk_gain = float(np.sqrt(2.0))
    return NetParams(
        w1=_orthogonal(rng, "w1", trunk_gain),
        b1=np.zeros(PARAM_SHAPES["b1"]),
        w2=_orthogonal(rng, "w2", trunk_gain),
        b2=np.zeros(PARAM_SHAPES["b2"]),
        w_policy=_orthogonal(rng, "w_policy", 0.01),
        b_policy=np.zeros(PARAM_SHAPES["b_policy"]),
        w_value=_orthogonal(rng, "w_value", 1.0),
        b_value=np.zeros(PARAM_SHAPES["b_value"]),
    )
