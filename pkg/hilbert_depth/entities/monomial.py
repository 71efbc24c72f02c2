from __future__ import annotations

from typing import FrozenSet
from typing import Iterable
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import field_validator
from pydantic import model_validator

MAX_VARIABLES = 64


class SquarefreeMonomial(BaseModel):
    """A product of distinct variables, identified with its support (1-based indices)."""

    support: FrozenSet[int] = Field(default_factory=frozenset)

    model_config = ConfigDict(frozen=True)

    @field_validator("support")
    @classmethod
    def _positive_indices(cls, support: FrozenSet[int]) -> FrozenSet[int]:
        if any(index < 1 for index in support):
            raise ValueError(f"variable indices are 1-based, got {sorted(support)}")
        return support

    @classmethod
    def of(cls, *indices: int) -> SquarefreeMonomial:
        return cls(support=frozenset(indices))

    @classmethod
    def from_mask(cls, mask: int) -> SquarefreeMonomial:
        return cls(support=frozenset(bit + 1 for bit in range(mask.bit_length()) if mask >> bit & 1))

    @property
    def degree(self) -> int:
        return len(self.support)

    @property
    def mask(self) -> int:
        return sum(1 << (index - 1) for index in self.support)

    def divides(self, other: SquarefreeMonomial) -> bool:
        return self.support <= other.support

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.degree, tuple(sorted(self.support))

    def __str__(self) -> str:
        if not self.support:
            return "1"
        return "*".join(f"x{index}" for index in sorted(self.support))


class SquarefreeIdeal(BaseModel):
    """
    A squarefree monomial ideal of K[x_1..x_n] given by its minimal generators.

    The zero ideal is the empty generator tuple. Generators are kept in
    canonical order (degree, then sorted support) so equal ideals compare equal.
    """

    n: int = Field(ge=1, le=MAX_VARIABLES)
    generators: Tuple[SquarefreeMonomial, ...] = Field(default_factory=tuple)

    model_config = ConfigDict(frozen=True)

    @field_validator("generators")
    @classmethod
    def _canonical_order(cls, generators: Tuple[SquarefreeMonomial, ...]) -> Tuple[SquarefreeMonomial, ...]:
        return tuple(sorted(generators, key=SquarefreeMonomial.sort_key))

    @model_validator(mode="after")
    def _check_minimal_generators(self) -> SquarefreeIdeal:
        for generator in self.generators:
            if generator.support and max(generator.support) > self.n:
                raise ValueError(f"generator {generator} uses a variable outside x1..x{self.n}")
        for i, first in enumerate(self.generators):
            for second in self.generators[i + 1:]:
                if first.divides(second) or second.divides(first):
                    raise ValueError(f"generators {first} and {second} are not minimal")
        return self

    @property
    def masks(self) -> Tuple[int, ...]:
        return tuple(generator.mask for generator in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def supports(self) -> Iterable[Tuple[int, ...]]:
        return (tuple(sorted(generator.support)) for generator in self.generators)

    def __str__(self) -> str:
        if self.is_zero:
            return f"(0) in n={self.n}"
        return "(" + ", ".join(str(generator) for generator in self.generators) + f") in n={self.n}"
