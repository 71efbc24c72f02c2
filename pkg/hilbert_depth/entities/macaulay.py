from __future__ import annotations

from math import comb
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator


class MacaulayRep(BaseModel):
    """
    The k-th Macaulay representation N = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_j, j)
    with n_k > n_{k-1} > ... > n_j >= j >= 1.

    ``terms`` holds the pairs (n_i, i) with i descending from k. The empty
    tuple represents N = 0.
    """

    k: int = Field(ge=1)
    terms: Tuple[Tuple[int, int], ...] = Field(default_factory=tuple)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_cascade(self) -> MacaulayRep:
        previous_top = None
        for position, (top, index) in enumerate(self.terms):
            if index != self.k - position:
                raise ValueError(f"term {position} has index {index}, expected {self.k - position}")
            if index < 1 or top < index:
                raise ValueError(f"term ({top},{index}) violates n_i >= i >= 1")
            if previous_top is not None and top >= previous_top:
                raise ValueError(f"tops must strictly decrease, got {previous_top} then {top}")
            previous_top = top
        return self

    @property
    def value(self) -> int:
        return sum(comb(top, index) for top, index in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"C({top},{index})" for top, index in self.terms)
