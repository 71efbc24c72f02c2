"""
Seeded random campaigns comparing hdepth(I) with hdepth(S/I).

Trial i at n draws from ``numpy.random.default_rng([seed, n, i])``, so a
report depends only on (n values, trials, seed) and never on the worker count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from hilbert_depth import LOGGER
from hilbert_depth.entities.campaign import CampaignReport
from hilbert_depth.entities.campaign import CampaignViolation
from hilbert_depth.entities.campaign import ConjectureSearchReport
from hilbert_depth.entities.campaign import FixtureCheck
from hilbert_depth.entities.campaign import IdealOutcome
from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.exceptions import CapacityError
from hilbert_depth.exceptions import DomainError
from hilbert_depth.settings import HDEPTH_SETTINGS
from hilbert_depth.use_cases.family import family_ideal
from hilbert_depth.use_cases.family import minimal_witness
from hilbert_depth.use_cases.hilbert import hdepth
from hilbert_depth.use_cases.ideal_operations import alpha_of_complement
from hilbert_depth.use_cases.ideal_operations import alpha_of_ideal
from hilbert_depth.use_cases.ideal_operations import monomial_ideal
from hilbert_depth.use_cases.verify.random_ideal import random_ideal

CAMPAIGN_MAX_N = 12


def ideal_outcome(ideal: SquarefreeIdeal, label: str) -> IdealOutcome:
    return IdealOutcome(
        label=label,
        n=ideal.n,
        generators=list(ideal.supports()),
        hdepth_quotient=hdepth(alpha_of_complement(ideal)).hdepth,
        hdepth_ideal=hdepth(alpha_of_ideal(ideal)).hdepth,
    )


def sample_m2_ideal(n: int, rng: np.random.Generator) -> SquarefreeIdeal:
    """A random ideal inside m^2 with 1..n generators of degree 2..n-1 (degree 2 when n = 2)."""
    return random_ideal(n, (1, n), (2, max(2, n - 1)), rng)


def _trial(task: Tuple[int, int, int]) -> IdealOutcome:
    seed, n, index = task
    ideal = sample_m2_ideal(n, np.random.default_rng([seed, n, index]))
    return ideal_outcome(ideal, label=f"n={n}/trial={index}")


def _outcomes(tasks: Sequence[Tuple[int, int, int]], jobs: int) -> Iterable[IdealOutcome]:
    if jobs <= 1:
        return map(_trial, tasks)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_trial, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))


def _check_n_values(n_values: Sequence[int]) -> None:
    if not n_values:
        raise DomainError("at least one n is required")
    for n in n_values:
        if n > CAMPAIGN_MAX_N:
            raise CapacityError(f"campaigns enumerate 2^n supports per trial, n <= {CAMPAIGN_MAX_N}", CAMPAIGN_MAX_N)
        if n < 2:
            raise DomainError(f"ideals inside m^2 need n >= 2, got {n}")


def theorem_violations(outcome: IdealOutcome) -> List[str]:
    """Rules hdepth(I) >= hdepth(S/I) - 1 (q <= 8 or n <= 10) and hdepth(I) >= hdepth(S/I) (q <= 6 or n <= 9)."""
    q = outcome.hdepth_quotient
    broken = []
    if (q <= 8 or outcome.n <= 10) and outcome.gap > 1:
        broken.append("gap<=1")
    if (q <= 6 or outcome.n <= 9) and outcome.gap > 0:
        broken.append("gap<=0")
    return broken


def campaign_fixtures(n_values: Sequence[int]) -> List[FixtureCheck]:
    fixtures = [
        FixtureCheck(outcome=ideal_outcome(monomial_ideal(n, tuple(range(1, n // 2 + 2))), f"principal n={n}"),
                     expected_gap=-1)
        for n in sorted(set(n_values))
    ]
    fixtures.append(FixtureCheck(outcome=ideal_outcome(family_ideal(10, 2), "I_{10,2}"), expected_gap=1))
    return fixtures


def campaign_theorem_main(
    n_values: Sequence[int],
    trials: int,
    seed: int,
    jobs: Optional[int] = None,
) -> CampaignReport:
    _check_n_values(n_values)
    if trials < 0:
        raise DomainError(f"trials must be nonnegative, got {trials}")
    report = CampaignReport(n_values=list(n_values), trials=trials, seed=seed)
    tasks = [(seed, n, index) for n in n_values for index in range(trials)]
    histogram: Counter = Counter()
    for outcome in _outcomes(tasks, jobs if jobs is not None else HDEPTH_SETTINGS.jobs):
        report.checked += 1
        histogram[outcome.gap] += 1
        for rule in theorem_violations(outcome):
            LOGGER.error(f"counterexample to {rule}: {outcome}")
            report.violations.append(CampaignViolation(rule=rule, outcome=outcome))
    report.gap_histogram = dict(sorted(histogram.items()))
    report.fixtures = campaign_fixtures(n_values)
    for fixture in report.fixtures:
        for rule in theorem_violations(fixture.outcome):
            report.violations.append(CampaignViolation(rule=rule, outcome=fixture.outcome))
    LOGGER.info(
        f"campaign seed={seed}: {report.checked} ideals, gaps {report.gap_histogram}, "
        f"{len(report.violations)} violations",
    )
    return report


def conjecture_search(
    d: int,
    n_max: int,
    trials: int,
    seed: int,
    n_cap: int = 400,
    jobs: Optional[int] = None,
) -> ConjectureSearchReport:
    """
    Look for ideals with gap hdepth(S/I) - hdepth(I) >= d although n < n(d) or
    hdepth(S/I) < q(d), where (n(d), q(d)) comes from the minimal family witness.
    """
    witness = minimal_witness(d, n_cap)
    if witness is None:
        raise DomainError(f"no family witness for gap {d} within n <= {n_cap}")
    n_values = list(range(2, n_max + 1))
    _check_n_values(n_values)
    report = ConjectureSearchReport(
        d=d,
        n_witness=witness.n,
        q_witness=witness.q,
        n_max=n_max,
        trials=trials,
        seed=seed,
    )
    tasks = [(seed, n, index) for n in n_values for index in range(trials)]
    for outcome in _outcomes(tasks, jobs if jobs is not None else HDEPTH_SETTINGS.jobs):
        if outcome.n >= witness.n and outcome.hdepth_quotient >= witness.q:
            continue
        report.checked += 1
        if outcome.gap > d - 1:
            LOGGER.error(f"gap {outcome.gap} >= {d} below the family witness: {outcome}")
            report.counterexamples.append(outcome)
    return report
