from __future__ import annotations

from typing import Optional

import click

from hilbert_depth.frameworks.cli.common import emit
from hilbert_depth.frameworks.cli.common import ExitCode
from hilbert_depth.frameworks.cli.common import finish
from hilbert_depth.frameworks.cli.common import guarded
from hilbert_depth.use_cases.family_explorer import FamilyExplorer
from hilbert_depth.use_cases.interface.command_handler_interface import CommandHandlerInterface
from hilbert_depth.use_cases.interface.report_writer_interface import ReportWriterInterface

FAMILY_COLUMNS = ("n", "m", "q", "h_ideal", "d")


class FamilyHandler(CommandHandlerInterface):
    def __init__(self, writer: ReportWriterInterface, explorer: FamilyExplorer):
        self.writer = writer
        self.explorer = explorer

    @staticmethod
    def _check_flags(
        n: Optional[int],
        m: Optional[int],
        table: bool,
        d_max: Optional[int],
        witness: bool,
        d: Optional[int],
    ) -> str:
        single = n is not None or m is not None
        if sum([single, table, witness]) != 1:
            raise click.UsageError("choose exactly one of --n/--m, --table or --witness")
        if single and (n is None or m is None):
            raise click.UsageError("--n and --m go together")
        if d_max is not None and not table:
            raise click.UsageError("--d-max only applies to --table")
        if witness and d is None:
            raise click.UsageError("--witness needs --d")
        if d is not None and not witness:
            raise click.UsageError("--d only applies to --witness")
        return "single" if single else "table" if table else "witness"

    def get_handler(self) -> click.Command:
        @click.command("family", help="Hilbert depths of I_{n,m} = (x1...xm) ∩ (x_{m+1},...,xn).")
        @click.option("--n", "n", type=click.IntRange(min=2), default=None)
        @click.option("--m", "m", type=click.IntRange(min=1), default=None)
        @click.option("--table", is_flag=True, help="Rows for the sixteen reference pairs, or a sweep with --d-max.")
        @click.option("--d-max", type=click.IntRange(min=0), default=None, help="Sweep for minimal witnesses of 0..D.")
        @click.option("--witness", is_flag=True, help="Minimal (n, m) with a given gap.")
        @click.option("--d", "d", type=click.IntRange(min=0), default=None)
        @click.option("--n-cap", type=click.IntRange(min=2), default=400, show_default=True)
        @click.option("--fast", is_flag=True, help="Only check entries with k >= m and k-m odd.")
        @click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes for sweeps.")
        @click.pass_context
        @guarded
        def command(
            ctx: click.Context,
            n: Optional[int],
            m: Optional[int],
            table: bool,
            d_max: Optional[int],
            witness: bool,
            d: Optional[int],
            n_cap: int,
            fast: bool,
            jobs: Optional[int],
        ) -> None:
            mode = self._check_flags(n, m, table, d_max, witness, d)
            if mode == "single":
                records = self.explorer.single(n, m, fast=fast)
            elif mode == "table":
                records = self.explorer.table(d_max, n_cap=n_cap, jobs=jobs)
            else:
                record = self.explorer.witness(d, n_cap=n_cap, jobs=jobs)
                if record is None:
                    click.echo(f"no (n, m) with d = {d} for n <= {n_cap}", err=True)
                    finish(ExitCode.FAILED_CHECK)
                    return
                records = [record]
            emit(ctx, self.writer, "family", records, columns=FAMILY_COLUMNS)

        return command
