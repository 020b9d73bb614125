import numpy as np
import pytest

from rif_kit.ppo import RolloutBuffer, compute_advantages, gae, normalize_advantages


class TestGae:
    def test_lambda_one_gives_reward_to_go(self) -> None:
        advantages, returns = gae(
            np.ones(3), np.zeros(3), np.array([False, False, True]), gamma=1.0, lam=1.0
        )
        np.testing.assert_array_equal(advantages, [3.0, 2.0, 1.0])
        np.testing.assert_array_equal(returns, [3.0, 2.0, 1.0])

    def test_perfect_values_give_zero_advantage(self) -> None:
        advantages, returns = gae(
            np.ones(3),
            np.array([3.0, 2.0, 1.0]),
            np.array([False, False, True]),
            gamma=1.0,
            lam=0.95,
        )
        np.testing.assert_array_equal(advantages, 0.0)
        np.testing.assert_array_equal(returns, [3.0, 2.0, 1.0])

    def test_lambda_zero_is_one_step_td(self) -> None:
        rewards = np.array([0.5, -1.0, 2.0, 0.25])
        values = np.array([0.1, 0.4, -0.3, 0.2])
        dones = np.array([False, True, False, False])
        advantages, _ = gae(rewards, values, dones, last_value=0.7, gamma=0.9, lam=0.0)
        expected = [
            0.5 + 0.9 * 0.4 - 0.1,
            -1.0 - 0.4,
            2.0 + 0.9 * 0.2 + 0.3,
            0.25 + 0.9 * 0.7 - 0.2,
        ]
        np.testing.assert_allclose(advantages, expected, atol=1e-12)

    def test_episode_boundary_stops_propagation(self) -> None:
        advantages, _ = gae(
            np.array([0.0, 5.0]), np.zeros(2), np.array([True, True]), lam=1.0
        )
        np.testing.assert_array_equal(advantages, [0.0, 5.0])

    def test_truncated_rollout_bootstraps(self) -> None:
        advantages, _ = gae(
            np.zeros(2), np.zeros(2), np.array([False, False]), last_value=4.0, lam=1.0
        )
        np.testing.assert_array_equal(advantages, [4.0, 4.0])

    def test_length_mismatch_raises(self) -> None:
        with pytest.raises(ValueError, match="equal length"):
            gae(np.zeros(3), np.zeros(2), np.zeros(3, dtype=bool))


class TestNormalizeAdvantages:
    def test_zero_mean_unit_variance(self, rng: np.random.Generator) -> None:
        normalized = normalize_advantages(rng.normal(3.0, 5.0, 1024))
        assert abs(normalized.mean()) < 1e-10
        assert abs(normalized.std() - 1.0) < 1e-10

    def test_degenerate_spread_is_left_alone(self) -> None:
        constant = np.full(8, 2.5)
        np.testing.assert_array_equal(normalize_advantages(constant), constant)


class TestComputeAdvantages:
    def test_requires_full_buffer(self) -> None:
        buffer = RolloutBuffer(4)
        buffer.add(np.zeros(8), 0, -0.7, 1.0, 0.0, False)
        with pytest.raises(ValueError, match="1 of 4 steps"):
            compute_advantages(buffer)

    def test_uses_bootstrap_only_when_truncated(self) -> None:
        buffer = RolloutBuffer(2)
        buffer.add(np.zeros(8), 0, -0.7, 1.0, 0.0, False)
        buffer.add(np.zeros(8), 1, -0.7, 1.0, 0.0, True)
        buffer.bootstrap_value = 100.0
        advantages, _ = compute_advantages(buffer, lam=1.0, normalize=False)
        np.testing.assert_array_equal(advantages, [2.0, 1.0])


class TestRolloutBuffer:
    def test_add_beyond_capacity_raises(self) -> None:
        buffer = RolloutBuffer(1)
        buffer.add(np.zeros(8), 0, -0.7, 0.0, 0.0, True)
        assert buffer.is_full
        assert buffer.completed_episodes == 1
        assert not buffer.truncated
        with pytest.raises(IndexError, match="buffer is full"):
            buffer.add(np.zeros(8), 0, -0.7, 0.0, 0.0, True)
