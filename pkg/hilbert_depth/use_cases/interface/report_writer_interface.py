from __future__ import annotations

from abc import ABC
from abc import abstractmethod
from typing import List
from typing import Sequence

from pydantic import BaseModel

from hilbert_depth.entities.output_format import OutputFormat


class ReportWriterInterface(ABC):
    @abstractmethod
    def render(
        self,
        title: str,
        records: Sequence[BaseModel],
        output_format: OutputFormat,
        columns: Sequence[str] = (),
        text_lines: List[str] = None,
    ) -> str:
        pass
