from __future__ import annotations

import functools
import sys
from enum import IntEnum
from typing import Callable
from typing import List
from typing import Optional
from typing import Sequence

import click
from pydantic import BaseModel

from hilbert_depth.entities.output_format import OutputFormat
from hilbert_depth.exceptions import CapacityError
from hilbert_depth.exceptions import ConfigurationError
from hilbert_depth.exceptions import DomainError
from hilbert_depth.exceptions import IdealParseError
from hilbert_depth.exceptions import SamplingError
from hilbert_depth.use_cases.interface.report_writer_interface import ReportWriterInterface


class ExitCode(IntEnum):
    OK = 0
    FAILED_CHECK = 1
    USAGE = 2
    CAPACITY = 3
    TRUNCATED = 4


class CliState(BaseModel):
    output_format: OutputFormat = OutputFormat.TEXT


def output_format(ctx: click.Context) -> OutputFormat:
    state = ctx.find_object(CliState)
    return state.output_format if state is not None else OutputFormat.TEXT


def emit(
    ctx: click.Context,
    writer: ReportWriterInterface,
    title: str,
    records: Sequence[BaseModel],
    columns: Sequence[str] = (),
    text_lines: Optional[List[str]] = None,
) -> None:
    click.echo(writer.render(title, records, output_format(ctx), columns, text_lines), nl=False)


def finish(code: ExitCode) -> None:
    if code != ExitCode.OK:
        sys.exit(int(code))


def guarded(command: Callable) -> Callable:
    """Turn library errors into ``Error: ...`` on stderr and the matching exit code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except CapacityError as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(int(ExitCode.CAPACITY))
        except (IdealParseError, DomainError, ConfigurationError, SamplingError) as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(int(ExitCode.USAGE))

    return wrapper
