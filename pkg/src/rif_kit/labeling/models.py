# src/rif_kit/labeling/models.py

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LabelSeries:
    """Binary in-position labels, one per price.

    ``commission`` is the expert commission as a fraction (3 bps = 0.0003).
    """

    labels: np.ndarray
    commission: float
    terminal_label: int

    def __post_init__(self) -> None:
        if self.labels.ndim != 1 or len(self.labels) == 0:
            raise ValueError("labels must be a non-empty 1-D array")
        if int(self.labels[-1]) != self.terminal_label:
            raise ValueError("final label must equal terminal_label")

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Position:
    """One long position from a maximal run of 1-labels.

    ``open_at_end`` marks a run still open at the last price, closed there
    mark-to-market. A run made of the final price alone has
    ``entry_index == exit_index`` and returns the bare entry commission.
    """

    entry_index: int
    exit_index: int
    entry_price: float
    exit_price: float
    ret: float
    open_at_end: bool = False

    @property
    def holding_period(self) -> int:
        return self.exit_index - self.entry_index


@dataclass(frozen=True)
class DpTables:
    """Forward-pass tables of the oracle labeler.

    ``state[i, t]`` is the best cumulative log-growth at price ``t`` ending
    in label ``i``; ``transition[t, i, j]`` is the log-growth of moving from
    label ``i`` at ``t`` to label ``j`` at ``t + 1``. The final column holds
    ``-inf`` for the label contradicting the terminal label.
    """

    state: np.ndarray  # (2, T)
    transition: np.ndarray  # (T - 1, 2, 2)
