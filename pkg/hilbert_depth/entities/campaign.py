from __future__ import annotations

from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from pydantic import BaseModel
from pydantic import Field
from pydantic import computed_field


class IdealOutcome(BaseModel):
    """Both Hilbert depths of one sampled or fixed ideal."""

    label: str
    n: int
    generators: List[Tuple[int, ...]]
    hdepth_quotient: int
    hdepth_ideal: int

    @computed_field
    @property
    def gap(self) -> int:
        return self.hdepth_quotient - self.hdepth_ideal


class CampaignViolation(BaseModel):
    rule: str
    outcome: IdealOutcome


class FixtureCheck(BaseModel):
    outcome: IdealOutcome
    expected_gap: int

    @computed_field
    @property
    def ok(self) -> bool:
        return self.outcome.gap == self.expected_gap


class CampaignReport(BaseModel):
    n_values: List[int]
    trials: int
    seed: int
    checked: int = 0
    gap_histogram: Dict[int, int] = Field(default_factory=dict)
    violations: List[CampaignViolation] = Field(default_factory=list)
    fixtures: List[FixtureCheck] = Field(default_factory=list)

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.violations and all(fixture.ok for fixture in self.fixtures)


class TheoremCheckReport(BaseModel):
    """Principal-ideal characterisation: hdepth(S/I) = n-1 iff I principal iff hdepth(I) = n."""

    n_max: int
    exhaustive_checked: int = 0
    random_checked: int = 0
    seed: Optional[int] = None
    counterexamples: List[IdealOutcome] = Field(default_factory=list)

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.counterexamples


class ConjectureSearchReport(BaseModel):
    d: int
    n_witness: int
    q_witness: int
    n_max: int
    trials: int
    seed: int
    checked: int = 0
    counterexamples: List[IdealOutcome] = Field(default_factory=list)

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.counterexamples
