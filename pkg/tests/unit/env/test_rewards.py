from fractions import Fraction

import numpy as np
import pytest

from rif_kit.env import (
    compute_feedback,
    execution_price,
    imitation_feedback,
    reinforcement_feedback,
)
from tests.conftest import bar

BAR = bar(100.0, 100.5, minute=0)
NEXT = bar(101.0, 101.5, minute=1)


class TestExecutionPrice:
    def test_change_fills_at_next_open(self) -> None:
        assert execution_price(True, BAR, NEXT) == 101.0

    def test_hold_marks_at_close(self) -> None:
        assert execution_price(False, BAR, NEXT) == 100.5

    def test_prices_differ_by_overnight_gap(self) -> None:
        gap = execution_price(True, BAR, NEXT) - execution_price(False, BAR, NEXT)
        assert gap == NEXT.open - BAR.close

    def test_end_of_day_raises(self) -> None:
        with pytest.raises(ValueError, match="end of day"):
            execution_price(True, BAR, None)


class TestReinforcementFeedback:
    def test_buy_pays_commission_on_fill(self) -> None:
        nxt = bar(100.0, 101.0, minute=1)
        assert reinforcement_feedback(1, 0, BAR, nxt, 0.001) == pytest.approx(0.9)

    def test_sell_pays_commission_only(self) -> None:
        nxt = bar(100.0, 101.0, minute=1)
        assert reinforcement_feedback(0, 1, BAR, nxt, 0.001) == pytest.approx(-0.1)

    def test_staying_flat_is_zero(self) -> None:
        assert reinforcement_feedback(0, 0, BAR, NEXT, 0.001) == 0.0

    def test_hold_accrues_close_to_close(self) -> None:
        assert reinforcement_feedback(1, 1, BAR, NEXT, 0.001) == 1.0


class TestImitationFeedback:
    def test_flat_label_is_zero(self) -> None:
        assert imitation_feedback(0, 1, BAR, NEXT) == 0.0

    def test_held_label_accrues_close_to_close(self) -> None:
        nxt = bar(100.5, 101.0, minute=1)
        assert imitation_feedback(1, 1, bar(100.0, 100.5), nxt) == 0.5

    def test_new_label_accrues_from_next_open(self) -> None:
        nxt = bar(100.0, 100.5, minute=1)
        assert imitation_feedback(1, 0, bar(100.0, 100.2), nxt) == 0.5


class TestComputeFeedback:
    def test_combined_is_exact_difference(self) -> None:
        fb = compute_feedback(1, 0, 1, 1, BAR, NEXT, 0.0003)
        assert fb.combined == fb.reinforcement - fb.imitation
        assert isinstance(fb.combined, Fraction)

    def test_matching_label_leaves_only_commission(self) -> None:
        fb = compute_feedback(1, 0, 1, 0, BAR, NEXT, 0.0003)
        assert fb.combined == -fb.commission
        assert fb.r_rif == -fb.cost

    def test_flat_label_makes_combined_equal_reinforcement(self) -> None:
        fb = compute_feedback(1, 1, 0, 1, BAR, NEXT, 0.0003)
        assert fb.r_rif == fb.r_rf

    def test_float_views_keep_identities(self, rng: np.random.Generator) -> None:
        for _ in range(2000):
            o0, c0, o1, c1 = 100.0 * np.exp(rng.normal(0.0, 0.01, 4))
            action, previous, label, previous_label = map(int, rng.integers(0, 2, 4))
            fb = compute_feedback(
                action,
                previous,
                label,
                previous_label,
                bar(o0, c0),
                bar(o1, c1, minute=1),
                float(rng.choice([1e-4, 3e-4, 7e-5])),
            )
            assert fb.r_rif == fb.r_rf - fb.r_if
            if label == 0:
                assert fb.r_rif == fb.r_rf
            if (action, previous) == (label, previous_label):
                assert fb.r_rif == -fb.cost
            assert abs(fb.r_rf - float(fb.reinforcement)) <= 2.0**-35

    def test_invalid_action_raises(self) -> None:
        with pytest.raises(ValueError, match="actions must be 0 or 1"):
            compute_feedback(2, 0, 0, 0, BAR, NEXT, 0.0)

    def test_invalid_label_raises(self) -> None:
        with pytest.raises(ValueError, match="labels must be 0 or 1"):
            compute_feedback(0, 0, -1, 0, BAR, NEXT, 0.0)

    def test_negative_commission_raises(self) -> None:
        with pytest.raises(ValueError, match="commission must be >= 0"):
            compute_feedback(0, 0, 0, 0, BAR, NEXT, -0.1)
