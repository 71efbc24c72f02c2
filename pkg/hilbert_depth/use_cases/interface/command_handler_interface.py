from __future__ import annotations

from abc import ABC
from abc import abstractmethod
from typing import Any

import click

from hilbert_depth.use_cases.interface.report_writer_interface import ReportWriterInterface


class CommandHandlerInterface(ABC):
    @abstractmethod
    def __init__(self, writer: ReportWriterInterface, use_case: Any):
        pass

    @abstractmethod
    def get_handler(self) -> click.Command:
        pass
