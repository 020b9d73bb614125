from .config import DEFAULT_FEATURES, IndicatorConfig
from .features import (
    INDICATORS,
    OBSERVATION_SIZE,
    build_observation,
    fit_bounds,
    minmax_normalize,
    price_features,
    raw_price_features,
)
from .technical import (
    InsufficientHistoryError,
    adx,
    cci,
    roc,
    rsi,
    stochastic_k,
    ultimate_oscillator,
    williams_r,
)

__all__ = [
    # Config
    "IndicatorConfig",
    "DEFAULT_FEATURES",
    # Indicators
    "williams_r",
    "rsi",
    "cci",
    "ultimate_oscillator",
    "adx",
    "roc",
    "stochastic_k",
    "InsufficientHistoryError",
    # Features
    "INDICATORS",
    "OBSERVATION_SIZE",
    "minmax_normalize",
    "raw_price_features",
    "build_observation",
    "price_features",
    "fit_bounds",
]
