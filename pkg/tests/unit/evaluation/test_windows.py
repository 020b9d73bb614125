from datetime import date

import pandas as pd
import pytest

from rif_kit.evaluation import RollingWindow, make_day_windows, make_windows
from rif_kit.market_data import TradingDay


def _weekdays(start: str, end: str) -> list[TradingDay]:
    return [TradingDay(d.date(), ()) for d in pd.bdate_range(start, end)]


def _month(d: date) -> tuple[int, int]:
    return d.year, d.month


class TestMakeWindows:
    def test_eighteen_months_make_one_window(self) -> None:
        windows = make_windows(_weekdays("2021-01-01", "2022-06-30"))
        assert len(windows) == 1
        w = windows[0]
        assert _month(w.train[0].date) == (2021, 1)
        assert _month(w.train[-1].date) == (2021, 12)
        assert _month(w.validation[0].date) == (2022, 1)
        assert _month(w.test[0].date) == (2022, 4)
        assert _month(w.test[-1].date) == (2022, 6)

    def test_too_few_months_raise(self) -> None:
        with pytest.raises(ValueError, match="spans 14 months, need at least 18"):
            make_windows(_weekdays("2021-01-01", "2022-02-28"))

    def test_test_ranges_tile_without_overlap(self) -> None:
        days = _weekdays("2021-01-01", "2022-12-31")
        windows = make_windows(days)
        assert len(windows) == 3
        tested = [d.date for w in windows for d in w.test]
        assert len(tested) == len(set(tested))
        assert tested == [d.date for d in days if d.date >= date(2022, 4, 1)]

    def test_ranges_are_disjoint_and_ordered(self) -> None:
        for w in make_windows(_weekdays("2021-01-01", "2022-12-31")):
            assert w.train[-1].date < w.validation[0].date < w.test[0].date

    def test_final_test_range_is_clipped(self) -> None:
        windows = make_windows(_weekdays("2021-01-01", "2022-08-15"))
        assert len(windows) == 2
        assert windows[-1].test_range[1] == date(2022, 8, 15)


class TestMakeDayWindows:
    def test_tiles_remaining_days(self) -> None:
        days = _weekdays("2023-01-02", "2023-02-10")[:30]
        windows = make_day_windows(days, 10, 5, 5)
        assert len(windows) == 3
        tested = [d.date for w in windows for d in w.test]
        assert tested == [d.date for d in days[15:]]

    def test_partial_final_test_range(self) -> None:
        days = _weekdays("2023-01-02", "2023-02-10")[:27]
        windows = make_day_windows(days, 10, 5, 5)
        assert len(windows[-1].test) == 2

    def test_too_few_days_raise(self) -> None:
        with pytest.raises(ValueError, match="need at least 20"):
            make_day_windows(_weekdays("2023-01-02", "2023-01-20"), 10, 5, 5)


class TestRollingWindow:
    def test_overlapping_ranges_raise(self) -> None:
        days = _weekdays("2023-01-02", "2023-01-06")
        with pytest.raises(ValueError, match="ordered and disjoint"):
            RollingWindow(0, tuple(days[:3]), tuple(days[2:4]), tuple(days[4:]))

    def test_describe_names_ranges(self) -> None:
        days = _weekdays("2023-01-02", "2023-01-06")
        window = RollingWindow(1, tuple(days[:3]), (days[3],), (days[4],))
        assert window.describe().startswith("window 1: train 2023-01-02..2023-01-04")
        assert window.test_range == (days[4].date, days[4].date)
