import math

import numpy as np
import pytest

from rif_kit.labeling import (
    brute_force_labels,
    build_dp_tables,
    cumulative_return,
    extract_positions,
    label_day,
    label_days,
    oracle_labels,
)
from rif_kit.market_data import SyntheticSpec, TradingDay, generate_synthetic
from rif_kit.observability import LoggingMetricsHook, names

COMMISSIONS = (0.0, 0.00005, 0.0001, 0.0003, 0.001, 0.005)
GRID_BPS = (0.5, 1, 2, 3, 4, 5, 10, 20)


def _random_prices(rng: np.random.Generator, n: int, scale: float = 0.002) -> np.ndarray:
    return 100.0 * np.exp(np.cumsum(scale * rng.standard_normal(n)))


class TestOracleLabels:
    def test_increasing_prices_hold_throughout(self) -> None:
        prices = np.linspace(100.0, 105.0, 12)
        series = oracle_labels(prices, 0.0, terminal_label=1)
        assert series.labels.tolist() == [1] * 12
        assert cumulative_return(prices, series.labels, 0.0) == pytest.approx(0.05)

    def test_move_below_commission_stays_flat(self) -> None:
        series = oracle_labels([100.0, 100.05], 0.002)
        assert series.labels.tolist() == [0, 0]

    def test_constant_prices_stay_flat(self) -> None:
        assert oracle_labels([100.0] * 10, 0.0003).labels.tolist() == [0] * 10

    def test_labels_are_read_only(self) -> None:
        series = oracle_labels([100.0, 101.0, 102.0], 0.0)
        with pytest.raises(ValueError):
            series.labels[0] = 1

    def test_terminal_label_is_respected(self, rng: np.random.Generator) -> None:
        prices = _random_prices(rng, 30)
        assert oracle_labels(prices, 0.0003, terminal_label=0).labels[-1] == 0
        assert oracle_labels(prices, 0.0003, terminal_label=1).labels[-1] == 1

    def test_dominates_random_labelings(self, rng: np.random.Generator) -> None:
        prices = _random_prices(rng, 50)
        best = cumulative_return(prices, oracle_labels(prices, 0.0003).labels, 0.0003)
        for _ in range(200):
            labels = rng.integers(0, 2, 50)
            labels[-1] = 0
            assert best >= cumulative_return(prices, labels, 0.0003) - 1e-12

    def test_short_series_raises(self) -> None:
        with pytest.raises(ValueError, match="series too short"):
            oracle_labels([100.0], 0.0)

    def test_non_positive_price_raises(self) -> None:
        with pytest.raises(ValueError, match="finite and > 0"):
            oracle_labels([100.0, -1.0, 100.0], 0.0)

    def test_invalid_terminal_label_raises(self) -> None:
        with pytest.raises(ValueError, match="terminal_label must be 0 or 1"):
            oracle_labels([100.0, 101.0], 0.0, terminal_label=2)


class TestBruteForceAgreement:
    def test_matches_on_fixed_series(self) -> None:
        rng = np.random.default_rng(0)
        for seed in range(10):
            prices = _random_prices(np.random.default_rng(seed), 12)
            commission = float(rng.choice(COMMISSIONS))
            np.testing.assert_array_equal(
                oracle_labels(prices, commission).labels,
                brute_force_labels(prices, commission).labels,
            )

    def test_optimal_return_on_random_series(self) -> None:
        rng = np.random.default_rng(2024)
        for _ in range(500):
            n = int(rng.integers(2, 17))
            prices = _random_prices(rng, n, scale=float(rng.choice((0.0005, 0.002, 0.01))))
            commission = float(rng.choice(COMMISSIONS))
            terminal = int(rng.integers(0, 2))
            dp = oracle_labels(prices, commission, terminal)
            exhaustive = brute_force_labels(prices, commission, terminal)
            assert cumulative_return(prices, dp.labels, commission) == pytest.approx(
                cumulative_return(prices, exhaustive.labels, commission), abs=1e-12
            )

    def test_brute_force_rejects_long_series(self) -> None:
        with pytest.raises(ValueError, match="too long for enumeration"):
            brute_force_labels(np.full(21, 100.0), 0.0)

    def test_brute_force_prefers_no_trade_on_ties(self) -> None:
        assert brute_force_labels([100.0, 100.0, 100.0], 0.0).labels.tolist() == [0, 0, 0]


class TestDpTables:
    def test_shapes_and_terminal_column(self) -> None:
        tables = build_dp_tables([100.0, 101.0, 99.0, 102.0], 0.001, terminal_label=0)
        assert tables.state.shape == (2, 4)
        assert tables.transition.shape == (3, 2, 2)
        assert tables.state[1, -1] == -math.inf
        assert math.isfinite(tables.state[0, -1])

    def test_transition_values(self) -> None:
        tables = build_dp_tables([100.0, 110.0], 0.001)
        step = math.log(110.0 / 100.0)
        assert tables.transition[0, 0, 0] == 0.0
        assert tables.transition[0, 0, 1] == pytest.approx(-math.log1p(0.001))
        assert tables.transition[0, 1, 1] == pytest.approx(step)
        assert tables.transition[0, 1, 0] == pytest.approx(step)

    def test_final_value_is_optimal_log_growth(self, rng: np.random.Generator) -> None:
        prices = _random_prices(rng, 40)
        tables = build_dp_tables(prices, 0.0003)
        labels = oracle_labels(prices, 0.0003).labels
        assert tables.state[0, -1] == pytest.approx(
            math.log1p(cumulative_return(prices, labels, 0.0003)), abs=1e-12
        )


class TestCommissionSensitivity:
    def test_position_count_falls_as_commission_rises(self) -> None:
        prices = _random_prices(np.random.default_rng(99), 390, scale=0.0005)
        counts = [
            len(extract_positions(prices, oracle_labels(prices, bps * 1e-4).labels))
            for bps in GRID_BPS
        ]
        assert counts == sorted(counts, reverse=True)
        assert counts[0] > counts[-1]

    def test_large_commission_means_no_positions(self) -> None:
        prices = _random_prices(np.random.default_rng(99), 390, scale=0.0005)
        assert oracle_labels(prices, 0.1).labels.sum() == 0


class TestLabelDay:
    def test_labels_decision_span(self, random_walk_days: list[TradingDay]) -> None:
        series = label_day(random_walk_days[0], 0.0003)
        assert len(series) == 387
        assert series.labels[-1] == 0
        np.testing.assert_array_equal(
            series.labels, oracle_labels(random_walk_days[0].closes[62:449], 0.0003).labels
        )

    def test_incomplete_day_raises(self, random_walk_days: list[TradingDay]) -> None:
        day = random_walk_days[0]
        short = TradingDay(day.date, day.bars[:400], incomplete=True, missing_minutes=50)
        with pytest.raises(ValueError, match="is incomplete"):
            label_day(short, 0.0003)

    def test_short_day_raises(self, random_walk_days: list[TradingDay]) -> None:
        day = random_walk_days[0]
        with pytest.raises(ValueError, match="need 450"):
            label_day(TradingDay(day.date, day.bars[:400]), 0.0003)

    def test_label_days_keys_and_metrics(self) -> None:
        days = generate_synthetic(SyntheticSpec(days=2, seed=4))
        hook = LoggingMetricsHook()
        labelled = label_days(days, 0.0003, metrics_hook=hook)
        assert list(labelled) == [d.date for d in days]
        assert hook.totals[names.LABELING_DAYS_TOTAL] == 2
