from __future__ import annotations

from typing import List
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import computed_field
from pydantic import model_validator


class FeasibleAlphaConstraints(BaseModel):
    """
    The relaxed region of alpha-vectors of S/I for I inside m^2 with hdepth(S/I) >= q.

    Vectors are enumerated up to ``max_degree``: alpha_0 = 1, alpha_1 = n,
    0 <= alpha_j <= C(n, j), consecutive Kruskal-Katona bounds in both
    directions and, unless ``beta_nonneg`` is off, beta_k^q >= 0 for k <= max_degree.
    With ``extension_check`` a vector only counts as a violation when it
    extends to a feasible vector up to degree q.
    """

    n: int = Field(ge=2)
    q: int = Field(ge=0)
    max_degree: int = Field(ge=1)
    beta_nonneg: bool = True
    extension_check: bool = True

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_degrees(self) -> FeasibleAlphaConstraints:
        if self.q > self.n:
            raise ValueError(f"q={self.q} exceeds n={self.n}")
        if self.max_degree > self.q:
            raise ValueError(f"max_degree={self.max_degree} exceeds q={self.q}")
        return self


class LemmaStatement(BaseModel):
    """beta_k^{q-1}(S/I) <= C(n-q+k, k) for every I inside m^2 with hdepth(S/I) = q and n >= q+2."""

    lemma_id: str
    q: int = Field(ge=3)
    k: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)

    @computed_field
    @property
    def inequality(self) -> str:
        return f"beta_{self.k}^{self.q - 1} <= C(n-{self.q - self.k},{self.k})"


class LemmaReport(BaseModel):
    lemma_id: str
    n: int
    q: int
    inequality: str = ""
    explored: int = 0
    feasible: int = 0
    violations: List[Tuple[int, ...]] = Field(default_factory=list)
    truncated: bool = False
    weakened: bool = False
    wall_time: float = Field(default=0.0, exclude=True)

    @computed_field
    @property
    def certified(self) -> bool:
        return not self.violations and not self.truncated


class OracleMismatch(BaseModel):
    n: int
    k: int
    count: int
    bound: str
    colex: int
    macaulay: int


class OracleReport(BaseModel):
    n_max: int
    k_max: int
    checked: int = 0
    mismatches: List[OracleMismatch] = Field(default_factory=list)

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.mismatches
