# src/rif_kit/indicators/config.py

from dataclasses import dataclass, field

MAX_PERIOD = 60
# 61-bar lookback plus the decision bar.
DEFAULT_WINDOW_BARS = 62

DEFAULT_FEATURES: tuple[str, ...] = (
    "williams_r",
    "rsi",
    "cci",
    "ultimate_oscillator",
    "adx",
    "roc",
)


def _default_bounds() -> dict[str, tuple[float, float]]:
    # CCI and ROC are unbounded; these are placeholders until fit_bounds runs
    # on the training days.
    return {
        "williams_r": (-100.0, 0.0),
        "rsi": (0.0, 100.0),
        "cci": (-300.0, 300.0),
        "ultimate_oscillator": (0.0, 100.0),
        "adx": (0.0, 100.0),
        "roc": (-1.0, 1.0),
        "stochastic_k": (0.0, 100.0),
    }


@dataclass(frozen=True)
class IndicatorConfig:
    """Periods (minutes) and normalisation bounds of the price features."""

    features: tuple[str, ...] = DEFAULT_FEATURES
    williams_r_period: int = 14
    rsi_period: int = 14
    cci_period: int = 20
    ultimate_periods: tuple[int, int, int] = (7, 14, 28)
    adx_period: int = 14
    roc_period: int = 10
    stochastic_period: int = 14
    bounds: dict[str, tuple[float, float]] = field(default_factory=_default_bounds)

    def __post_init__(self) -> None:
        if len(self.features) != 6:
            raise ValueError(
                f"features must name 6 indicators, got {len(self.features)}"
            )
        if len(set(self.features)) != len(self.features):
            raise ValueError("features must not repeat")
        periods = (
            self.williams_r_period,
            self.rsi_period,
            self.cci_period,
            *self.ultimate_periods,
            self.adx_period,
            self.roc_period,
            self.stochastic_period,
        )
        if any(p < 1 or p > MAX_PERIOD for p in periods):
            raise ValueError(f"every period must be in [1, {MAX_PERIOD}]")
        for name in self.features:
            needed = self.history_bars(name)
            if needed > DEFAULT_WINDOW_BARS:
                raise ValueError(
                    f"{name} needs {needed} bars, the lookback window holds "
                    f"{DEFAULT_WINDOW_BARS}"
                )
        for name in self.features:
            if name not in self.bounds:
                raise ValueError(f"missing bounds for feature '{name}'")
            lo, hi = self.bounds[name]
            if not lo < hi:
                raise ValueError(f"bounds for '{name}' must satisfy min < max")

    def history_bars(self, name: str) -> int:
        """Bars the indicator ``name`` reads, the current bar included."""
        match name:
            case "williams_r":
                return self.williams_r_period
            case "rsi":
                return self.rsi_period + 1
            case "cci":
                return self.cci_period
            case "ultimate_oscillator":
                return max(self.ultimate_periods) + 1
            case "adx":
                return 2 * self.adx_period
            case "roc":
                return self.roc_period + 1
            case "stochastic_k":
                return self.stochastic_period
        raise ValueError(f"unknown feature '{name}'")

    def required_bars(self) -> int:
        return max(self.history_bars(name) for name in self.features)
