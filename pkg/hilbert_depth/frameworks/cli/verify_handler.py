from __future__ import annotations

from typing import List
from typing import Optional
from typing import Tuple

import click

from hilbert_depth.entities.campaign import CampaignReport
from hilbert_depth.entities.campaign import ConjectureSearchReport
from hilbert_depth.entities.campaign import TheoremCheckReport
from hilbert_depth.entities.proof_table import TableCheckReport
from hilbert_depth.entities.verification import LemmaReport
from hilbert_depth.entities.verification import OracleReport
from hilbert_depth.frameworks.cli.common import emit
from hilbert_depth.frameworks.cli.common import ExitCode
from hilbert_depth.frameworks.cli.common import finish
from hilbert_depth.frameworks.cli.common import guarded
from hilbert_depth.use_cases.interface.command_handler_interface import CommandHandlerInterface
from hilbert_depth.use_cases.interface.report_writer_interface import ReportWriterInterface
from hilbert_depth.use_cases.verify.verifier import Verifier


def lemma_exit_code(report: LemmaReport) -> ExitCode:
    if report.violations:
        return ExitCode.FAILED_CHECK
    if report.truncated:
        return ExitCode.TRUNCATED
    return ExitCode.OK


def _ok(report) -> ExitCode:
    return ExitCode.OK if report.ok else ExitCode.FAILED_CHECK


def _lemma_lines(report: LemmaReport) -> List[str]:
    lines = [
        f"{report.lemma_id}: {report.inequality} at n={report.n} (q={report.q})",
        f"  explored {report.explored} nodes, {report.feasible} feasible vectors in {report.wall_time:.2f}s",
    ]
    if report.weakened:
        lines.append("  beta >= 0 constraints dropped")
    if report.truncated:
        lines.append("  TRUNCATED: node cap reached, the search is partial")
    lines.append(f"  violations: {len(report.violations)}")
    lines.extend(f"    alpha = {list(alpha)}" for alpha in report.violations[:20])
    lines.append("  certified" if report.certified else "  not certified")
    return lines


def _table_lines(report: TableCheckReport) -> List[str]:
    lines = [
        f"tables: {', '.join(report.tables)}",
        f"  {report.values_checked} printed values and {report.claims_checked} claims recomputed",
    ]
    for diff in report.diffs:
        label = "known typo" if diff.known_typo else "UNEXPECTED"
        lines.append(f"  {label}: {diff.location} printed {diff.printed}, recomputed {diff.computed}")
    lines.extend(f"  known typo not reproduced: {typo}" for typo in report.missing_known_typos)
    lines.append("  diff set matches the known typo list" if report.ok else "  diff set differs from the known list")
    return lines


def _campaign_lines(report: CampaignReport) -> List[str]:
    lines = [
        f"campaign n={report.n_values} trials={report.trials} seed={report.seed}: {report.checked} ideals",
        "  gap histogram (hdepth(S/I) - hdepth(I)): "
        + ", ".join(f"{gap}: {count}" for gap, count in report.gap_histogram.items()),
    ]
    for fixture in report.fixtures:
        status = "ok" if fixture.ok else "MISMATCH"
        outcome = fixture.outcome
        lines.append(f"  fixture {outcome.label}: gap {outcome.gap} (expected {fixture.expected_gap}) {status}")
    for violation in report.violations:
        lines.append(f"  VIOLATION {violation.rule}: {violation.outcome.label} {violation.outcome.generators}")
    lines.append(f"  violations: {len(report.violations)}")
    return lines


class VerifyHandler(CommandHandlerInterface):
    def __init__(self, writer: ReportWriterInterface, verifier: Verifier):
        self.writer = writer
        self.verifier = verifier

    def _lemma(self) -> click.Command:
        @click.command("lemma", help="Search the relaxed alpha region for violations of a shadow-bound lemma.")
        @click.option("--id", "lemma_id", required=True, help="L3.2-q4..L3.2-q10, L2.4-q5..L2.4-q7, L3.3..L3.6.")
        @click.option("--n", "n", type=click.IntRange(min=2), required=True)
        @click.option("--node-cap", type=click.IntRange(min=1), default=None, help="Defaults to HDEPTH_NODE_CAP.")
        @click.option("--weaken", is_flag=True, help="Drop the beta >= 0 constraints.")
        @click.option("--no-extension", is_flag=True, help="Count violations without checking they extend to degree q.")
        @click.pass_context
        @guarded
        def lemma(
            ctx: click.Context,
            lemma_id: str,
            n: int,
            node_cap: Optional[int],
            weaken: bool,
            no_extension: bool,
        ) -> None:
            report = self.verifier.lemma(
                lemma_id,
                n,
                node_cap=node_cap,
                weaken=weaken,
                extension_check=not no_extension,
            )
            columns = ("lemma_id", "n", "q", "explored", "feasible", "truncated", "weakened", "certified")
            emit(ctx, self.writer, "lemma", [report], columns=columns, text_lines=_lemma_lines(report))
            finish(lemma_exit_code(report))

        return lemma

    def _tables(self) -> click.Command:
        @click.command("tables", help="Recompute the printed proof tables and case claims.")
        @click.option("--q", "q", type=int, default=None, help="Restrict to the tables used at this q (8, 9 or 10).")
        @click.option("--table", "table_id", default=None, help="Restrict to one table id.")
        @click.pass_context
        @guarded
        def tables(ctx: click.Context, q: Optional[int], table_id: Optional[str]) -> None:
            report = self.verifier.tables(q=q, table_id=table_id)
            columns = ("tables", "values_checked", "claims_checked", "diffs", "ok")
            emit(ctx, self.writer, "tables", [report], columns=columns, text_lines=_table_lines(report))
            finish(_ok(report))

        return tables

    def _campaign(self) -> click.Command:
        @click.command("campaign", help="Seeded random check of hdepth(I) >= hdepth(S/I) - 1 and its sharper form.")
        @click.option("--n", "n_values", type=click.IntRange(min=2), multiple=True, required=True)
        @click.option("--trials", type=click.IntRange(min=0), default=1000, show_default=True)
        @click.option("--seed", type=int, required=True)
        @click.option("--jobs", type=click.IntRange(min=1), default=None)
        @click.pass_context
        @guarded
        def campaign(
            ctx: click.Context,
            n_values: Tuple[int, ...],
            trials: int,
            seed: int,
            jobs: Optional[int],
        ) -> None:
            report = self.verifier.campaign(n_values, trials, seed, jobs=jobs)
            columns = ("n_values", "trials", "seed", "checked", "gap_histogram", "violations", "ok")
            emit(ctx, self.writer, "campaign", [report], columns=columns, text_lines=_campaign_lines(report))
            finish(_ok(report))

        return campaign

    def _oracle(self) -> click.Command:
        @click.command("oracle", help="Compare Kruskal-Katona bounds with brute-force colex shadows.")
        @click.option("--n", "n_max", type=click.IntRange(min=1), default=12, show_default=True)
        @click.option("--k", "k_max", type=click.IntRange(min=1), default=4, show_default=True)
        @click.pass_context
        @guarded
        def oracle(ctx: click.Context, n_max: int, k_max: int) -> None:
            report: OracleReport = self.verifier.oracle(n_max, k_max)
            lines = [
                f"oracle n<={n_max} k<={k_max}: {report.checked} colex families, {len(report.mismatches)} mismatches",
            ]
            lines.extend(f"  MISMATCH {mismatch}" for mismatch in report.mismatches)
            emit(ctx, self.writer, "oracle", [report], columns=("n_max", "k_max", "checked", "ok"), text_lines=lines)
            finish(_ok(report))

        return oracle

    def _theorem(self) -> click.Command:
        @click.command("theorem", help="hdepth(S/I) = n-1 iff I principal iff hdepth(I) = n.")
        @click.option("--n-max", type=click.IntRange(min=1, max=6), default=5, show_default=True)
        @click.option("--trials", type=click.IntRange(min=0), default=0, show_default=True)
        @click.option("--seed", type=int, default=None)
        @click.option("--random-n-max", type=click.IntRange(min=2, max=12), default=10, show_default=True)
        @click.pass_context
        @guarded
        def theorem(ctx: click.Context, n_max: int, trials: int, seed: Optional[int], random_n_max: int) -> None:
            report: TheoremCheckReport = self.verifier.theorem(n_max, trials, seed, random_n_max)
            lines = [
                f"principal characterisation: {report.exhaustive_checked} exhaustive and "
                f"{report.random_checked} random ideals, {len(report.counterexamples)} counterexamples",
            ]
            columns = ("n_max", "exhaustive_checked", "random_checked", "seed", "ok")
            emit(ctx, self.writer, "theorem", [report], columns=columns, text_lines=lines)
            finish(_ok(report))

        return theorem

    def _conjecture(self) -> click.Command:
        @click.command("conjecture", help="Search for gaps >= d below the minimal family witness of d.")
        @click.option("--d", "d", type=click.IntRange(min=0), required=True)
        @click.option("--n-max", type=click.IntRange(min=2), default=10, show_default=True)
        @click.option("--trials", type=click.IntRange(min=0), default=200, show_default=True)
        @click.option("--seed", type=int, required=True)
        @click.option("--n-cap", type=click.IntRange(min=2), default=400, show_default=True)
        @click.option("--jobs", type=click.IntRange(min=1), default=None)
        @click.pass_context
        @guarded
        def conjecture(
            ctx: click.Context,
            d: int,
            n_max: int,
            trials: int,
            seed: int,
            n_cap: int,
            jobs: Optional[int],
        ) -> None:
            report: ConjectureSearchReport = self.verifier.conjecture(d, n_max, trials, seed, n_cap=n_cap, jobs=jobs)
            lines = [
                f"gap {d}: family witness n={report.n_witness}, q={report.q_witness}; "
                f"{report.checked} ideals below it, {len(report.counterexamples)} with gap >= {d}",
            ]
            lines.extend(
                f"  {outcome.label}: {outcome.generators} gap {outcome.gap}" for outcome in report.counterexamples
            )
            columns = ("d", "n_witness", "q_witness", "n_max", "trials", "seed", "checked", "ok")
            emit(ctx, self.writer, "conjecture", [report], columns=columns, text_lines=lines)
            finish(_ok(report))

        return conjecture

    def get_handler(self) -> click.Group:
        @click.group("verify", help="Oracles and numerical re-certification.")
        def verify() -> None:
            pass

        for command in (
            self._lemma(),
            self._tables(),
            self._campaign(),
            self._oracle(),
            self._theorem(),
            self._conjecture(),
        ):
            verify.add_command(command)
        return verify
