from __future__ import annotations

from pathlib import Path
from typing import List

import click

from hilbert_depth.entities.beta_table import HdepthSummary
from hilbert_depth.frameworks.cli.common import emit
from hilbert_depth.frameworks.cli.common import guarded
from hilbert_depth.use_cases.hdepth_calculator import HdepthCalculator
from hilbert_depth.use_cases.hdepth_calculator import MODES
from hilbert_depth.use_cases.interface.command_handler_interface import CommandHandlerInterface
from hilbert_depth.use_cases.interface.report_writer_interface import ReportWriterInterface


def _explain(summary: HdepthSummary) -> List[str]:
    result = summary.explanation
    lines = [f"hdepth({summary.module}) = {summary.hdepth}"]
    if result is None:
        return lines
    lines.append(f"  witness beta^{result.hdepth}: {list(result.witness_beta.values)}")
    for certificate in result.failure_certificates:
        lines.append(f"  q={certificate.q}: beta_{certificate.k}^{certificate.q} = {certificate.value} < 0")
    return lines


class HdepthHandler(CommandHandlerInterface):
    def __init__(self, writer: ReportWriterInterface, calculator: HdepthCalculator):
        self.writer = writer
        self.calculator = calculator

    def get_handler(self) -> click.Command:
        @click.command("hdepth", help="Hilbert depth of S/I and/or I for an ideal file.")
        @click.argument("ideal_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
        @click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of variables.")
        @click.option(
            "--mode",
            type=click.Choice(MODES),
            default="both",
            show_default=True,
        )
        @click.option("--explain", is_flag=True, help="Show the witness row and one negative entry per larger q.")
        @click.pass_context
        @guarded
        def command(ctx: click.Context, ideal_path: Path, n: int, mode: str, explain: bool) -> None:
            summaries = self.calculator.compute(ideal_path, n, mode, explain)
            text_lines = [line for summary in summaries for line in _explain(summary)]
            emit(ctx, self.writer, "hdepth", summaries, columns=("module", "n", "hdepth"), text_lines=text_lines)

        return command
