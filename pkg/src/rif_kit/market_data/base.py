# src/rif_kit/market_data/base.py

from abc import ABC, abstractmethod
from typing import BinaryIO

from .models import MinuteBar


class BarParser(ABC):
    @abstractmethod
    def parse(self, source: BinaryIO) -> list[MinuteBar]:
        """
        Parse a byte stream into minute bars.

        Requirements:
        - Deterministic output for same input
        - Bars returned in strictly increasing timestamp order
        - Malformed rows raise, never silently dropped
        """
        raise NotImplementedError
