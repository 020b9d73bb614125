from pathlib import Path

import pandas as pd
import pytest
import yaml

from rif_kit.cli import build_parser, main


def _write_config(tmp_path: Path, **extra: object) -> Path:
    data = {
        "data": {"synthetic": {"days": 2, "seed": 5}},
        "windows": {"mode": "days", "train": 1, "validation": 1, "test": 1},
        "output_dir": str(tmp_path / "out"),
        **extra,
    }
    path = tmp_path / "run.yaml"
    path.write_text(yaml.safe_dump(data))
    return path


class TestParser:
    def test_subcommand_is_required(self) -> None:
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_subcommand_is_usage_error(self) -> None:
        with pytest.raises(SystemExit) as exc:
            main(["backtest", "--config", "run.yaml"])
        assert exc.value.code == 2

    def test_label_accepts_several_thetas(self) -> None:
        args = build_parser().parse_args(
            ["label", "--config", "run.yaml", "--theta-bps", "1", "5"]
        )
        assert args.theta_bps == [1.0, 5.0]
        assert args.terminal_label == 0


class TestExitCodes:
    def test_missing_config_is_config_error(self, tmp_path: Path) -> None:
        assert main(["label", "--config", str(tmp_path / "missing.yaml")]) == 3

    def test_invalid_config_is_config_error(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path, unknown_section={})
        assert main(["label", "--config", str(path)]) == 3

    def test_empty_data_file_is_data_error(self, tmp_path: Path) -> None:
        data_path = tmp_path / "bars.csv"
        data_path.write_text("")
        path = tmp_path / "run.yaml"
        path.write_text(yaml.safe_dump({"data": {"path": str(data_path)}}))
        assert main(["label", "--config", str(path), "--out", str(tmp_path / "out")]) == 4

    def test_missing_data_file_is_data_error(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text(yaml.safe_dump({"data": {"path": str(tmp_path / "none.csv")}}))
        assert main(["label", "--config", str(path), "--out", str(tmp_path / "out")]) == 4

    def test_window_out_of_range_is_config_error(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path, data={"synthetic": {"days": 3, "seed": 5}})
        assert main(["train", "--config", str(path), "--window", "7"]) == 3

    def test_too_few_days_for_a_window_is_runtime_failure(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path)
        assert main(["train", "--config", str(path)]) == 5

    def test_report_before_evaluate_is_data_error(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path, data={"synthetic": {"days": 3, "seed": 5}})
        assert main(["report", "--config", str(path)]) == 4


class TestLabelCommand:
    def test_writes_per_day_labels_and_summary(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path)
        assert main(["label", "--config", str(path), "--theta-bps", "1", "5"]) == 0

        labels = tmp_path / "out" / "labels"
        summary = pd.read_csv(labels / "summary.csv", comment="#")
        assert list(summary.columns) == ["theta_bps", "days", "positions"]
        assert list(summary["theta_bps"]) == [1.0, 5.0]
        assert list(summary["days"]) == [2, 2]
        assert summary["positions"].iloc[0] >= summary["positions"].iloc[1]

        for name in ("theta_1bps", "theta_5bps"):
            files = sorted((labels / name).glob("*.csv"))
            assert [f.name for f in files] == ["2023-01-02.csv", "2023-01-03.csv"]
            frame = pd.read_csv(files[0], comment="#")
            assert list(frame.columns) == ["timestamp", "close", "label"]
            assert len(frame) == 387
            assert set(frame["label"]) <= {0, 1}
            assert frame["timestamp"].iloc[0] == "2023-01-02T10:32"

    def test_rerun_is_byte_identical(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path)
        summary = tmp_path / "out" / "labels" / "summary.csv"
        day = tmp_path / "out" / "labels" / "theta_3bps" / "2023-01-03.csv"

        assert main(["label", "--config", str(path)]) == 0
        first = summary.read_bytes(), day.read_bytes()
        assert main(["label", "--config", str(path)]) == 0
        assert (summary.read_bytes(), day.read_bytes()) == first

    def test_files_carry_provenance_header(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path, seed=12)
        assert main(["label", "--config", str(path)]) == 0
        first = (tmp_path / "out" / "labels" / "summary.csv").read_text().splitlines()[0]
        assert first.startswith("# config_hash=")
        assert first.endswith(" seed=12")


class TestScatterCommand:
    def test_writes_scatter_and_passes_structure_check(self, tmp_path: Path) -> None:
        path = _write_config(tmp_path, scatter_steps=500)
        assert main(["scatter", "--config", str(path)]) == 0
        frame = pd.read_csv(tmp_path / "out" / "scatter.csv", comment="#")
        assert list(frame.columns) == ["r_rf", "r_rif", "y", "a"]
        assert len(frame) == 500
