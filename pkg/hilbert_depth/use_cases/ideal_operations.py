"""
Squarefree ideal operations and alpha-vector counting.

Counting walks all 2^n supports as integer bitmasks (bit i-1 stands for x_i)
in numpy chunks, so memory stays bounded by the chunk size.
"""

from __future__ import annotations

from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Union

import numpy as np
from pydantic import ValidationError

from hilbert_depth import LOGGER
from hilbert_depth.entities.alpha_vector import AlphaVector
from hilbert_depth.entities.monomial import MAX_VARIABLES
from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.entities.monomial import SquarefreeMonomial
from hilbert_depth.exceptions import CapacityError
from hilbert_depth.exceptions import DomainError
from hilbert_depth.settings import HDEPTH_SETTINGS

SupportLike = Union[SquarefreeMonomial, Iterable[int]]

_POPCOUNT16 = np.zeros(1 << 16, dtype=np.int64)
for _bit in range(16):
    _POPCOUNT16 += (np.arange(1 << 16, dtype=np.int64) >> _bit) & 1


def _popcount(masks: np.ndarray) -> np.ndarray:
    return _POPCOUNT16[masks & 0xFFFF] + _POPCOUNT16[(masks >> 16) & 0xFFFF]


def _as_mask(n: int, support: SupportLike) -> int:
    indices = support.support if isinstance(support, SquarefreeMonomial) else support
    mask = 0
    for index in indices:
        if not 1 <= index <= n:
            raise DomainError(f"variable index {index} outside 1..{n}")
        mask |= 1 << (index - 1)
    return mask


def minimalize(n: int, supports: Iterable[SupportLike]) -> SquarefreeIdeal:
    """Ideal generated by ``supports`` with duplicate and divisible generators removed."""
    if n > MAX_VARIABLES:
        raise CapacityError(
            f"n={n} exceeds the {MAX_VARIABLES}-variable limit of the bitmask representation",
            MAX_VARIABLES,
        )
    masks = sorted({_as_mask(n, support) for support in supports}, key=lambda mask: (mask.bit_count(), mask))
    kept: List[int] = []
    for mask in masks:
        if not any(mask & generator == generator for generator in kept):
            kept.append(mask)
    try:
        return SquarefreeIdeal(n=n, generators=tuple(SquarefreeMonomial.from_mask(mask) for mask in kept))
    except ValidationError as error:
        raise DomainError(str(error)) from error


def monomial_ideal(n: int, *supports: Sequence[int]) -> SquarefreeIdeal:
    """Shorthand: ``monomial_ideal(4, (1, 2), (3,))`` is (x1*x2, x3) in four variables."""
    return minimalize(n, supports)


def contains(ideal: SquarefreeIdeal, mono: SquarefreeMonomial) -> bool:
    return any(generator.divides(mono) for generator in ideal.generators)


def ideal_contains(big: SquarefreeIdeal, small: SquarefreeIdeal) -> bool:
    """True when every generator of ``small`` lies in ``big``."""
    return all(contains(big, generator) for generator in small.generators)


def is_principal(ideal: SquarefreeIdeal) -> bool:
    return len(ideal.generators) == 1


def is_in_m2(ideal: SquarefreeIdeal) -> bool:
    return all(generator.degree >= 2 for generator in ideal.generators)


def _membership(chunk: np.ndarray, masks: Sequence[int]) -> np.ndarray:
    hit = np.zeros(chunk.shape, dtype=bool)
    for mask in masks:
        hit |= (chunk & mask) == mask
    return hit


def check_enumerable(n: int, enumeration_cap: Optional[int] = None) -> None:
    """Raise CapacityError when counting over all 2^n supports is beyond the cap."""
    cap = enumeration_cap if enumeration_cap is not None else HDEPTH_SETTINGS.enumeration_cap
    if n > cap:
        raise CapacityError(f"n={n} exceeds the enumeration cap {cap}; use the closed forms instead", cap)


def _count_by_degree(
    n: int,
    upper: Optional[Sequence[int]],
    lower: Sequence[int],
    enumeration_cap: Optional[int],
    chunk_bits: Optional[int],
) -> List[int]:
    check_enumerable(n, enumeration_cap)
    step = 1 << (chunk_bits if chunk_bits is not None else HDEPTH_SETTINGS.chunk_bits)
    total = 1 << n
    counts = np.zeros(n + 1, dtype=np.int64)
    for start in range(0, total, step):
        chunk = np.arange(start, min(start + step, total), dtype=np.int64)
        keep = np.ones(chunk.shape, dtype=bool) if upper is None else _membership(chunk, upper)
        if lower:
            keep &= ~_membership(chunk, lower)
        counts += np.bincount(_popcount(chunk[keep]), minlength=n + 1)
    LOGGER.debug(f"Counted {total} supports of {n} variables in chunks of {step}")
    return [int(count) for count in counts]


def alpha_of_quotient(
    J: Optional[SquarefreeIdeal],
    I: SquarefreeIdeal,
    enumeration_cap: Optional[int] = None,
    chunk_bits: Optional[int] = None,
) -> AlphaVector:
    """
    Alpha-vector of J/I: squarefree monomials per degree lying in J but not in I.

    ``J=None`` stands for the whole ring S.
    """
    if J is not None:
        if J.n != I.n:
            raise DomainError(f"ideals live in different rings (n={J.n} and n={I.n})")
        if not ideal_contains(J, I):
            raise DomainError(f"{I} is not contained in {J}")
    upper = None if J is None else J.masks
    values = _count_by_degree(I.n, upper, I.masks, enumeration_cap, chunk_bits)
    return AlphaVector(n=I.n, values=tuple(values))


def alpha_of_complement(ideal: SquarefreeIdeal, **kwargs) -> AlphaVector:
    """alpha(S/I)."""
    return alpha_of_quotient(None, ideal, **kwargs)


def alpha_of_ideal(ideal: SquarefreeIdeal, **kwargs) -> AlphaVector:
    """alpha(I), i.e. alpha(I/0)."""
    return alpha_of_quotient(ideal, SquarefreeIdeal(n=ideal.n), **kwargs)


def enumerate_minimal_ideals(n: int) -> Iterator[SquarefreeIdeal]:
    """Every proper nonzero squarefree ideal of K[x_1..x_n], one per antichain of nonempty supports."""
    if not 1 <= n <= 6:
        raise CapacityError(f"exhaustive ideal enumeration supports 1 <= n <= 6, got {n}", 6)
    masks = sorted(range(1, 1 << n), key=lambda mask: (mask.bit_count(), mask))
    chosen: List[int] = []

    def extend(start: int) -> Iterator[SquarefreeIdeal]:
        for position in range(start, len(masks)):
            mask = masks[position]
            if any(mask & other in (mask, other) for other in chosen):
                continue
            chosen.append(mask)
            yield SquarefreeIdeal(n=n, generators=tuple(SquarefreeMonomial.from_mask(m) for m in chosen))
            yield from extend(position + 1)
            chosen.pop()

    yield from extend(0)


__all__ = [
    "minimalize",
    "check_enumerable",
    "monomial_ideal",
    "contains",
    "ideal_contains",
    "is_principal",
    "is_in_m2",
    "alpha_of_quotient",
    "alpha_of_complement",
    "alpha_of_ideal",
    "enumerate_minimal_ideals",
]
