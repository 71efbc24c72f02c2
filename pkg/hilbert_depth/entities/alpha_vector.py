from __future__ import annotations

from math import comb
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator


class AlphaVector(BaseModel):
    """Counts (alpha_0, ..., alpha_n) of squarefree monomials per degree."""

    n: int = Field(ge=0)
    values: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_bounds(self) -> AlphaVector:
        if len(self.values) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} entries, got {len(self.values)}")
        for j, value in enumerate(self.values):
            if not 0 <= value <= comb(self.n, j):
                raise ValueError(f"alpha_{j}={value} outside [0, C({self.n},{j})]")
        return self

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)
