# src/rif_kit/labeling/brute_force.py

import math
from collections.abc import Sequence

import numpy as np

from .models import LabelSeries

MAX_BRUTE_FORCE_LENGTH = 20
TIE_TOLERANCE = 1e-12


def _enumerate_labels(n: int, terminal_label: int) -> np.ndarray:
    """All ``2**(n-1)`` label rows in lexicographic order, last column fixed."""
    codes = np.arange(2 ** (n - 1), dtype=np.int64)[:, None]
    shifts = np.arange(n - 2, -1, -1, dtype=np.int64)
    free = ((codes >> shifts) & 1).astype(np.int8)
    last = np.full((len(free), 1), terminal_label, dtype=np.int8)
    return np.hstack([free, last])


def brute_force_labels(
    prices: Sequence[float] | np.ndarray,
    commission: float,
    terminal_label: int = 0,
) -> LabelSeries:
    """Exhaustive reference for ``oracle_labels``.

    Scores every sequence by its entry and exit prices rather than by
    per-step increments. Sequences within ``TIE_TOLERANCE`` of the best
    log-growth tie; the tie goes to the fewest positions, then to the
    lexicographically smallest sequence.
    """
    p = np.asarray(prices, dtype=np.float64)
    n = len(p)
    if n < 2:
        raise ValueError("series too short: need at least 2 prices")
    if n > MAX_BRUTE_FORCE_LENGTH:
        raise ValueError(
            f"series too long for enumeration: {n} > {MAX_BRUTE_FORCE_LENGTH}"
        )
    if np.any(p <= 0):
        raise ValueError("prices must be > 0")
    if commission < 0:
        raise ValueError("commission must be >= 0")
    if terminal_label not in (0, 1):
        raise ValueError("terminal_label must be 0 or 1")

    labels = _enumerate_labels(n, terminal_label)
    log_p = np.log(p)
    previous = np.hstack([np.zeros((len(labels), 1), dtype=np.int8), labels[:, :-1]])
    entries = (labels == 1) & (previous == 0)
    exits = (labels == 0) & (previous == 1)

    # log(1 + r) = log(exit) - log(entry) - log(1 + commission) per position
    growth = (
        exits @ log_p
        - entries @ log_p
        - entries.sum(axis=1) * math.log1p(commission)
    )
    if terminal_label == 1:
        growth = growth + log_p[-1]

    n_positions = entries.sum(axis=1)
    tied = np.flatnonzero(growth >= growth.max() - TIE_TOLERANCE)
    fewest = tied[n_positions[tied] == n_positions[tied].min()]
    best = labels[fewest[0]].copy()
    best.setflags(write=False)
    return LabelSeries(
        labels=best, commission=commission, terminal_label=terminal_label
    )
