from __future__ import annotations

from typing import Optional
from typing import Sequence

from hilbert_depth import LOGGER
from hilbert_depth.entities.campaign import CampaignReport
from hilbert_depth.entities.campaign import ConjectureSearchReport
from hilbert_depth.entities.campaign import TheoremCheckReport
from hilbert_depth.entities.proof_table import TableCheckReport
from hilbert_depth.entities.verification import LemmaReport
from hilbert_depth.entities.verification import OracleReport
from hilbert_depth.settings import HDEPTH_SETTINGS
from hilbert_depth.use_cases.verify.campaign import campaign_theorem_main
from hilbert_depth.use_cases.verify.campaign import conjecture_search
from hilbert_depth.use_cases.verify.colex_oracle import kruskal_katona_oracle_check
from hilbert_depth.use_cases.verify.lemma_certification import certify_lemma
from hilbert_depth.use_cases.verify.proof_tables import check_proof_tables
from hilbert_depth.use_cases.verify.proof_tables import select_tables
from hilbert_depth.use_cases.verify.theorem_checks import check_principal_theorem


class Verifier:
    """
    The numerical re-certification runs behind ``hdepth verify``.

    ``node_cap`` and ``jobs`` fall back to the settings when a call leaves them out.
    """

    def __init__(self, node_cap: Optional[int] = None, jobs: Optional[int] = None):
        self.node_cap = node_cap if node_cap is not None else HDEPTH_SETTINGS.node_cap
        self.jobs = jobs if jobs is not None else HDEPTH_SETTINGS.jobs

    def lemma(
        self,
        lemma_id: str,
        n: int,
        node_cap: Optional[int] = None,
        weaken: bool = False,
        extension_check: bool = True,
    ) -> LemmaReport:
        report = certify_lemma(
            lemma_id,
            n,
            node_cap=node_cap or self.node_cap,
            weaken=weaken,
            extension_check=extension_check,
        )
        LOGGER.info(f"{lemma_id} at n={n}: {report.explored} nodes, {len(report.violations)} violations")
        return report

    def tables(self, q: Optional[int] = None, table_id: Optional[str] = None) -> TableCheckReport:
        return check_proof_tables(select_tables(q=q, table_id=table_id))

    def campaign(
        self,
        n_values: Sequence[int],
        trials: int,
        seed: int,
        jobs: Optional[int] = None,
    ) -> CampaignReport:
        return campaign_theorem_main(list(n_values), trials, seed, jobs=jobs or self.jobs)

    def oracle(self, n_max: int, k_max: int) -> OracleReport:
        return kruskal_katona_oracle_check(n_max, k_max)

    def theorem(
        self,
        n_max: int,
        trials: int = 0,
        seed: Optional[int] = None,
        random_n_max: int = 10,
    ) -> TheoremCheckReport:
        return check_principal_theorem(n_max, trials, seed, random_n_max)

    def conjecture(
        self,
        d: int,
        n_max: int,
        trials: int,
        seed: int,
        n_cap: int = 400,
        jobs: Optional[int] = None,
    ) -> ConjectureSearchReport:
        return conjecture_search(d, n_max, trials, seed, n_cap=n_cap, jobs=jobs or self.jobs)


__all__ = ["Verifier"]
