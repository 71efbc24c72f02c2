from __future__ import annotations

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator


class FamilyRecord(BaseModel):
    """One row (n, m, q, h_ideal, d) for the ideal (x_1...x_m) ∩ (x_{m+1},...,x_n)."""

    n: int = Field(ge=2)
    m: int = Field(ge=1)
    q: int = Field(ge=0)
    h_ideal: int = Field(ge=0)
    d: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_row(self) -> FamilyRecord:
        if self.m >= self.n:
            raise ValueError(f"m={self.m} must be smaller than n={self.n}")
        if self.h_ideal != (self.n + self.m + 1) // 2:
            raise ValueError("h_ideal must equal floor((n+m+1)/2)")
        if self.d != self.q - self.h_ideal:
            raise ValueError("d must equal q - h_ideal")
        return self
