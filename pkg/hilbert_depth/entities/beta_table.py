from __future__ import annotations

from typing import List
from typing import Optional
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator


class BetaTable(BaseModel):
    n: int = Field(ge=0)
    q: int = Field(ge=0)
    values: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_shape(self) -> BetaTable:
        if self.q > self.n:
            raise ValueError(f"q={self.q} exceeds n={self.n}")
        if len(self.values) != self.q + 1:
            raise ValueError(f"a row at q={self.q} has {self.q + 1} entries, got {len(self.values)}")
        return self

    @property
    def is_nonnegative(self) -> bool:
        return all(value >= 0 for value in self.values)

    def first_negative(self) -> Optional[int]:
        return next((k for k, value in enumerate(self.values) if value < 0), None)


class FailureCertificate(BaseModel):
    """A negative entry beta_k^q < 0 proving hdepth < q."""

    q: int
    k: int
    value: int = Field(lt=0)

    model_config = ConfigDict(frozen=True)


class HdepthResult(BaseModel):
    hdepth: int = Field(ge=0)
    witness_beta: BetaTable
    failure_certificates: List[FailureCertificate] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_witness(self) -> HdepthResult:
        if self.witness_beta.q != self.hdepth:
            raise ValueError("the witness row must sit at q = hdepth")
        if not self.witness_beta.is_nonnegative:
            raise ValueError("the witness row has a negative entry")
        return self


class HdepthSummary(BaseModel):
    """Hilbert depth of S/I or of I, with the full result attached in explain mode."""

    module: str
    n: int
    hdepth: int
    explanation: Optional[HdepthResult] = None
