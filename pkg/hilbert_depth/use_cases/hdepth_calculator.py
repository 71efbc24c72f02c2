from __future__ import annotations

from pathlib import Path
from typing import List

from hilbert_depth import LOGGER
from hilbert_depth.entities.beta_table import HdepthSummary
from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.hilbert import hdepth
from hilbert_depth.use_cases.ideal_operations import alpha_of_complement
from hilbert_depth.use_cases.ideal_operations import alpha_of_ideal
from hilbert_depth.use_cases.ideal_operations import check_enumerable
from hilbert_depth.use_cases.interface.ideal_reader_interface import IdealReaderInterface

MODULES = {
    "quotient": ("S/I", alpha_of_complement),
    "ideal": ("I", alpha_of_ideal),
}
MODES = ("quotient", "ideal", "both")


class HdepthCalculator:
    """Hilbert depth of S/I and/or I for ideals read through ``reader``."""

    def __init__(self, reader: IdealReaderInterface):
        self.reader = reader

    def compute(self, ideal_path: Path, n: int, mode: str = "both", explain: bool = False) -> List[HdepthSummary]:
        if mode not in MODES:
            raise DomainError(f"mode must be one of {', '.join(MODES)}, got {mode!r}")
        check_enumerable(n)
        ideal = self.reader.read(ideal_path, n)
        if ideal.is_zero:
            raise DomainError(f"{ideal_path} has no generators; the zero ideal has no Hilbert depth")
        selected = ["quotient", "ideal"] if mode == "both" else [mode]
        summaries = []
        for key in selected:
            module, alpha_of = MODULES[key]
            result = hdepth(alpha_of(ideal))
            LOGGER.info(f"hdepth({module}) = {result.hdepth} for {len(ideal.generators)} generators, n={n}")
            summaries.append(
                HdepthSummary(module=module, n=n, hdepth=result.hdepth, explanation=result if explain else None),
            )
        return summaries


__all__ = ["HdepthCalculator", "MODES"]
