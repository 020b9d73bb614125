# src/rif_kit/errors.py

"""Exception hierarchy shared by every rif-kit package.

Precondition violations on plain arguments still raise ``ValueError``;
these types mark the failures the CLI maps to distinct exit codes.
"""

from typing import Any


class RifKitError(Exception):
    """Base class for rif-kit failures."""


class ConfigError(RifKitError, ValueError):
    """Invalid or unreadable run configuration."""


class DataError(RifKitError, ValueError):
    """Malformed market data.

    ``row`` is the 1-based data row (header excluded) when the failure is
    tied to a single CSV row.
    """

    def __init__(self, message: str, row: int | None = None) -> None:
        super().__init__(message if row is None else f"row {row}: {message}")
        self.row = row


class TrainingError(RifKitError, RuntimeError):
    """Training aborted, e.g. on a non-finite loss."""

    def __init__(self, message: str, diagnostics: dict[str, Any] | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})
