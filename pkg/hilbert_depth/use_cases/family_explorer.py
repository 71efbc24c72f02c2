from __future__ import annotations

from typing import List
from typing import Optional

from hilbert_depth.entities.family_record import FamilyRecord
from hilbert_depth.settings import HDEPTH_SETTINGS
from hilbert_depth.use_cases.family import family_record
from hilbert_depth.use_cases.family import family_table
from hilbert_depth.use_cases.family import minimal_witness
from hilbert_depth.use_cases.family import sweep_witnesses


class FamilyExplorer:
    """Rows of the I_{n,m} family: single pairs, the reference table, witness sweeps."""

    def __init__(self, n_cap: int = 400, jobs: Optional[int] = None):
        self.n_cap = n_cap
        self.jobs = jobs if jobs is not None else HDEPTH_SETTINGS.jobs

    def single(self, n: int, m: int, fast: bool = False) -> List[FamilyRecord]:
        return [family_record(n, m, odd_only=fast)]

    def table(
        self,
        d_max: Optional[int] = None,
        n_cap: Optional[int] = None,
        jobs: Optional[int] = None,
    ) -> List[FamilyRecord]:
        """The sixteen reference rows, or the first witness of every gap 0..d_max."""
        if d_max is None:
            return family_table()
        found = sweep_witnesses(d_max, n_cap=n_cap or self.n_cap, jobs=jobs or self.jobs)
        return list(found.values())

    def witness(self, d: int, n_cap: Optional[int] = None, jobs: Optional[int] = None) -> Optional[FamilyRecord]:
        return minimal_witness(d, n_cap or self.n_cap, jobs=jobs or self.jobs)


__all__ = ["FamilyExplorer"]
