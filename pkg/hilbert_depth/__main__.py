from __future__ import annotations

import sys
from typing import Optional

import click

from hilbert_depth import __version__
from hilbert_depth.exceptions import ConfigurationError


def build_cli() -> click.Group:
    from hilbert_depth.adapters.ideal_file_reader import IdealFileReader
    from hilbert_depth.adapters.report_writer import ReportWriter
    from hilbert_depth.entities.output_format import OutputFormat
    from hilbert_depth.frameworks.cli.common import CliState
    from hilbert_depth.frameworks.cli.family_handler import FamilyHandler
    from hilbert_depth.frameworks.cli.hdepth_handler import HdepthHandler
    from hilbert_depth.frameworks.cli.verify_handler import VerifyHandler
    from hilbert_depth.settings import HDEPTH_SETTINGS
    from hilbert_depth.use_cases.family_explorer import FamilyExplorer
    from hilbert_depth.use_cases.hdepth_calculator import HdepthCalculator
    from hilbert_depth.use_cases.verify.verifier import Verifier
    from hilbert_depth.utils.basic_logger import LOG_LEVELS
    from hilbert_depth.utils.basic_logger import loguru_logger

    @click.group(help="Exact Hilbert depth of squarefree monomial ideals and their quotients.")
    @click.version_option(__version__, prog_name="hdepth")
    @click.option(
        "--format",
        "output_format",
        type=click.Choice([fmt.value for fmt in OutputFormat]),
        default=OutputFormat.TEXT.value,
        show_default=True,
    )
    @click.option(
        "--log-level",
        type=click.Choice(LOG_LEVELS, case_sensitive=False),
        default=None,
        help="Console log level, defaults to HDEPTH_LOG_LEVEL.",
    )
    @click.pass_context
    def cli(ctx: click.Context, output_format: str, log_level: Optional[str]) -> None:
        loguru_logger(
            "hilbert_depth",
            stream_level=log_level or HDEPTH_SETTINGS.log_level,
            filename=HDEPTH_SETTINGS.log_file,
        )
        ctx.obj = CliState(output_format=OutputFormat(output_format))

    writer = ReportWriter()
    hdepth_calculator = HdepthCalculator(IdealFileReader())
    family_explorer = FamilyExplorer()
    verifier = Verifier()

    for handler in (
        HdepthHandler(writer, hdepth_calculator),
        FamilyHandler(writer, family_explorer),
        VerifyHandler(writer, verifier),
    ):
        cli.add_command(handler.get_handler())
    return cli


def main() -> None:
    try:
        cli = build_cli()
    except ConfigurationError as error:
        click.echo(f"Error: {error}", err=True)
        sys.exit(2)
    cli()


if __name__ == "__main__":
    main()
