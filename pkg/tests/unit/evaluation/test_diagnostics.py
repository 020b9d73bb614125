from pathlib import Path

import pytest

from rif_kit.env import BPS, EnvConfig, LabelFollowingPolicy, TradingEnv, run_episodes
from rif_kit.evaluation import (
    ScatterPoint,
    check_scatter_structure,
    label_agreement,
    reward_scatter,
    write_scatter,
)
from rif_kit.market_data import SessionWindow, TradingDay


class TestRewardScatter:
    def test_random_policy_scatter_has_expected_structure(
        self, random_walk_days: list[TradingDay]
    ) -> None:
        env = TradingEnv(EnvConfig(trading_commission=3 * BPS, expert_commission=3 * BPS))
        points = reward_scatter(env, random_walk_days, n_steps=2000, seed=1)
        check = check_scatter_structure(points)
        assert check.points == 2000
        assert check.ok
        assert sum(check.cell_counts.values()) == 2000
        assert set(check.cell_counts) <= {(0, 0), (0, 1), (1, 0), (1, 1)}

    def test_same_seed_same_points(self, random_walk_days: list[TradingDay]) -> None:
        env = TradingEnv()
        a = reward_scatter(env, random_walk_days[:1], n_steps=300, seed=4)
        b = reward_scatter(env, random_walk_days[:1], n_steps=300, seed=4)
        assert a == b

    def test_rejects_empty_inputs(self, random_walk_days: list[TradingDay]) -> None:
        with pytest.raises(ValueError, match="no days"):
            reward_scatter(TradingEnv(), [], n_steps=10)
        with pytest.raises(ValueError, match="n_steps must be > 0"):
            reward_scatter(TradingEnv(), random_walk_days, n_steps=0)


class TestCheckScatterStructure:
    def test_counts_violations(self) -> None:
        points = [
            ScatterPoint(r_rf=0.5, r_rif=0.4, label=0, action=1),
            ScatterPoint(
                r_rf=0.5,
                r_rif=0.0,
                label=1,
                action=1,
                previous_label=1,
                previous_action=1,
                commission=0.01,
            ),
            ScatterPoint(r_rf=0.5, r_rif=0.5, label=0, action=1),
        ]
        check = check_scatter_structure(points)
        assert check.diagonal_violations == 1
        assert check.horizontal_violations == 1
        assert not check.ok
        assert check.cell_counts == {(0, 1): 2, (1, 1): 1}

    def test_write_scatter_columns(self, tmp_path: Path) -> None:
        path = write_scatter(
            [ScatterPoint(0.1, 0.1, 0, 1)], tmp_path / "scatter.csv", header="seed=0"
        )
        assert path.read_text().splitlines() == ["# seed=0", "r_rf,r_rif,y,a", "0.1,0.1,0,1"]


class TestLabelAgreement:
    def test_label_policy_agrees_fully(
        self, random_walk_days: list[TradingDay], session: SessionWindow
    ) -> None:
        records = run_episodes(
            TradingEnv(), random_walk_days[:1], LabelFollowingPolicy(session.first_decision_index)
        )
        assert label_agreement(records) == 1.0

    def test_empty_records_raise(self) -> None:
        with pytest.raises(ValueError, match="no records"):
            label_agreement([])
