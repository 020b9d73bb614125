import numpy as np
import pytest

from rif_kit.indicators import (
    IndicatorConfig,
    InsufficientHistoryError,
    build_observation,
    fit_bounds,
    minmax_normalize,
    price_features,
    raw_price_features,
)
from rif_kit.market_data import SessionWindow, TradingDay
from tests.conftest import build_day


class TestMinmaxNormalize:
    def test_maps_bounds_to_unit_interval(self) -> None:
        assert minmax_normalize(0.0, 0.0, 100.0) == -1.0
        assert minmax_normalize(50.0, 0.0, 100.0) == 0.0
        assert minmax_normalize(100.0, 0.0, 100.0) == 1.0

    def test_clamps_outside_bounds(self) -> None:
        assert minmax_normalize(-5.0, 0.0, 1.0) == -1.0
        assert minmax_normalize(7.0, 0.0, 1.0) == 1.0

    def test_degenerate_bounds_raise(self) -> None:
        with pytest.raises(ValueError, match="degenerate bounds"):
            minmax_normalize(1.0, 2.0, 2.0)

    def test_reversed_bounds_raise(self) -> None:
        with pytest.raises(ValueError, match="lo < hi"):
            minmax_normalize(1.0, 3.0, 2.0)


class TestIndicatorConfig:
    def test_requires_six_features(self) -> None:
        with pytest.raises(ValueError, match="6 indicators"):
            IndicatorConfig(features=("rsi",))

    def test_rejects_repeated_features(self) -> None:
        with pytest.raises(ValueError, match="must not repeat"):
            IndicatorConfig(features=("rsi",) * 6)

    def test_rejects_period_beyond_lookback(self) -> None:
        with pytest.raises(ValueError, match="every period"):
            IndicatorConfig(rsi_period=61)

    def test_history_bars_per_indicator(self) -> None:
        config = IndicatorConfig()
        assert config.history_bars("williams_r") == 14
        assert config.history_bars("rsi") == 15
        assert config.history_bars("ultimate_oscillator") == 29
        assert config.history_bars("adx") == 28
        assert config.history_bars("roc") == 11
        assert config.required_bars() == 29

    def test_rejects_adx_longer_than_lookback_window(self) -> None:
        with pytest.raises(ValueError, match="adx needs 64 bars"):
            IndicatorConfig(adx_period=32)
        with pytest.raises(ValueError, match="adx needs 80 bars"):
            IndicatorConfig(adx_period=40)

    def test_longest_accepted_adx_fits_first_decision(
        self, random_walk_days: list[TradingDay], session: SessionWindow
    ) -> None:
        config = IndicatorConfig(adx_period=31)
        assert config.required_bars() == 62
        obs = build_observation(
            random_walk_days[0], session.first_decision_index, 0, config, session
        )
        assert obs.shape == (8,)
        assert np.all(np.abs(obs) <= 1.0)

    def test_rejects_unknown_feature(self) -> None:
        features = ("williams_r", "rsi", "cci", "ultimate_oscillator", "adx", "macd")
        with pytest.raises(ValueError, match="unknown feature 'macd'"):
            IndicatorConfig(features=features)

    def test_rejects_inverted_bounds(self) -> None:
        bounds = dict(IndicatorConfig().bounds, rsi=(100.0, 0.0))
        with pytest.raises(ValueError, match="min < max"):
            IndicatorConfig(bounds=bounds)


class TestObservation:
    def test_components_are_in_unit_interval(
        self, random_walk_days: list[TradingDay], session: SessionWindow
    ) -> None:
        day = random_walk_days[0]
        config = IndicatorConfig()
        for t in (62, 100, 250, 448):
            obs = build_observation(day, t, 1, config, session)
            assert obs.shape == (8,)
            assert np.all(obs >= -1.0) and np.all(obs <= 1.0)

    def test_position_and_time_encoding(
        self, random_walk_days: list[TradingDay], session: SessionWindow
    ) -> None:
        day = random_walk_days[0]
        config = IndicatorConfig()
        first = build_observation(day, 62, 0, config, session)
        last = build_observation(day, 448, 1, config, session)
        assert first[6] == -1.0 and first[7] == 1.0
        assert last[6] == 1.0 and last[7] == -1.0

    def test_invalid_position_raises(self, random_walk_days: list[TradingDay]) -> None:
        with pytest.raises(ValueError, match="position must be 0 or 1"):
            build_observation(random_walk_days[0], 100, 2, IndicatorConfig())

    def test_inside_lookback_raises(self, random_walk_days: list[TradingDay]) -> None:
        with pytest.raises(InsufficientHistoryError):
            raw_price_features(random_walk_days[0], 30, IndicatorConfig())

    def test_short_session_lookback_raises(
        self, random_walk_days: list[TradingDay]
    ) -> None:
        short = SessionWindow(lookback=20)
        with pytest.raises(InsufficientHistoryError, match="indicators need 29 bars"):
            raw_price_features(random_walk_days[0], 100, IndicatorConfig(), short)

    def test_future_bars_do_not_change_features(
        self, random_walk_days: list[TradingDay]
    ) -> None:
        day = random_walk_days[0]
        t = 150
        changed = list(day.closes)
        changed[t + 1 :] = [c * 1.05 for c in changed[t + 1 :]]
        other = build_day(changed, day=day.date)
        original = build_day(list(day.closes), day=day.date)
        config = IndicatorConfig()
        np.testing.assert_array_equal(
            raw_price_features(original, t, config), raw_price_features(other, t, config)
        )

    def test_price_features_match_observations(
        self, random_walk_days: list[TradingDay], session: SessionWindow
    ) -> None:
        day = random_walk_days[1]
        config = IndicatorConfig()
        table = price_features(day, config, session)
        assert table.shape == (387, 6)
        np.testing.assert_array_equal(table[10], build_observation(day, 72, 0, config)[:6])


class TestFitBounds:
    def test_fits_only_unbounded_features(self, random_walk_days: list[TradingDay]) -> None:
        config = IndicatorConfig()
        fitted = fit_bounds(random_walk_days[:1], config)
        assert fitted.bounds["rsi"] == config.bounds["rsi"]
        assert fitted.bounds["cci"] != config.bounds["cci"]
        roc_index = config.features.index("roc")
        raw = np.vstack(
            [raw_price_features(random_walk_days[0], t, config) for t in range(62, 449)]
        )
        assert fitted.bounds["roc"] == (raw[:, roc_index].min(), raw[:, roc_index].max())

    def test_degenerate_fit_widens(self) -> None:
        flat = build_day([100.0] * 450)
        fitted = fit_bounds([flat], IndicatorConfig())
        assert fitted.bounds["roc"] == (-1.0, 1.0)
        assert fitted.bounds["cci"] == (-1.0, 1.0)

    def test_no_days_keeps_config(self) -> None:
        config = IndicatorConfig()
        assert fit_bounds([], config) is config
