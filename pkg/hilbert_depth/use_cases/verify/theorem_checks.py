from __future__ import annotations

from typing import Iterable
from typing import Optional

import numpy as np

from hilbert_depth import LOGGER
from hilbert_depth.entities.campaign import IdealOutcome
from hilbert_depth.entities.campaign import TheoremCheckReport
from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.ideal_operations import enumerate_minimal_ideals
from hilbert_depth.use_cases.ideal_operations import is_principal
from hilbert_depth.use_cases.verify.campaign import ideal_outcome
from hilbert_depth.use_cases.verify.random_ideal import random_ideal


def principal_characterisation_holds(ideal: SquarefreeIdeal, outcome: IdealOutcome) -> bool:
    """hdepth(S/I) = n-1 iff I is principal iff hdepth(I) = n."""
    principal = is_principal(ideal)
    return (outcome.hdepth_quotient == ideal.n - 1) == principal == (outcome.hdepth_ideal == ideal.n)


def _check(ideals: Iterable[SquarefreeIdeal], report: TheoremCheckReport, label: str) -> int:
    checked = 0
    for ideal in ideals:
        outcome = ideal_outcome(ideal, label=label)
        checked += 1
        if not principal_characterisation_holds(ideal, outcome):
            LOGGER.error(f"principal characterisation fails for {ideal}: {outcome}")
            report.counterexamples.append(outcome)
    return checked


def check_principal_theorem(
    n_max: int,
    trials: int = 0,
    seed: Optional[int] = None,
    random_n_max: int = 10,
) -> TheoremCheckReport:
    """
    Exhaustive check over every proper nonzero ideal for n <= n_max, plus
    ``trials`` seeded random ideals per n in 2..random_n_max.
    """
    if trials and seed is None:
        raise DomainError("random trials need a seed")
    report = TheoremCheckReport(n_max=n_max, seed=seed)
    for n in range(1, n_max + 1):
        report.exhaustive_checked += _check(enumerate_minimal_ideals(n), report, label=f"exhaustive n={n}")
    for n in range(2, random_n_max + 1):
        sampled = (
            random_ideal(n, (1, n), (1, n), np.random.default_rng([seed, n, index]))
            for index in range(trials)
        )
        report.random_checked += _check(sampled, report, label=f"random n={n}")
    LOGGER.info(
        f"principal characterisation: {report.exhaustive_checked} exhaustive, "
        f"{report.random_checked} random, {len(report.counterexamples)} counterexamples",
    )
    return report
