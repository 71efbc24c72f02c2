from __future__ import annotations

from abc import ABC
from abc import abstractmethod
from pathlib import Path

from hilbert_depth.entities.monomial import SquarefreeIdeal


class IdealReaderInterface(ABC):
    @abstractmethod
    def parse(self, text: str, n: int) -> SquarefreeIdeal:
        pass

    @abstractmethod
    def read(self, path: Path, n: int) -> SquarefreeIdeal:
        pass
