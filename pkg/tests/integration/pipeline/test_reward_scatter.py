import pytest

from rif_kit.env import BPS, EnvConfig, TradingEnv
from rif_kit.evaluation import check_scatter_structure, reward_scatter
from rif_kit.market_data import SyntheticSpec, generate_synthetic

pytestmark = pytest.mark.slow

N_STEPS = 100_000


def test_random_policy_scatter_at_three_bps() -> None:
    days = generate_synthetic(SyntheticSpec(kind="random-walk", days=30, seed=5))
    env = TradingEnv(EnvConfig(trading_commission=3 * BPS, expert_commission=3 * BPS))

    points = reward_scatter(env, days, n_steps=N_STEPS, seed=17)
    check = check_scatter_structure(points)

    assert check.points == N_STEPS
    assert check.diagonal_violations == 0
    assert check.horizontal_violations == 0
    assert set(check.cell_counts) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    matched = [
        p
        for p in points
        if p.label == 1 and p.action == 1 and p.previous_action == p.previous_label
    ]
    assert matched
    assert all(p.r_rif in (0.0, -p.commission) for p in matched)
