"""
Closed forms for I_{n,m} = (x_1...x_m) ∩ (x_{m+1}, ..., x_n).

alpha_j(S/I_{n,m}) = C(n,j) - C(n-m, j-m) (second term only for j > m),
beta_k^q(S/I_{n,m}) = C(n-q+k-1, k) - C(n-q+k-1-m, k-m) + (-1)^{k-m} C(q-m, k-m)
and hdepth(I_{n,m}) = floor((n+m+1)/2).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from hilbert_depth import LOGGER
from hilbert_depth.entities.alpha_vector import AlphaVector
from hilbert_depth.entities.family_record import FamilyRecord
from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.exceptions import DomainError
from hilbert_depth.settings import HDEPTH_SETTINGS
from hilbert_depth.use_cases.combinatorics import generalized_binom
from hilbert_depth.use_cases.ideal_operations import minimalize

REFERENCE_PAIRS: Tuple[Tuple[int, int], ...] = (
    (6, 2),
    (10, 2),
    (15, 3),
    (20, 4),
    (25, 5),
    (30, 6),
    (35, 5),
    (40, 8),
    (45, 9),
    (51, 7),
    (55, 11),
    (106, 20),
    (139, 17),
    (161, 19),
    (183, 21),
    (350, 7),
)


def _check_pair(n: int, m: int) -> None:
    if not 1 <= m < n:
        raise DomainError(f"the family needs 1 <= m < n, got n={n}, m={m}")


def family_ideal(n: int, m: int) -> SquarefreeIdeal:
    """Generators x_1...x_m * x_i for m < i <= n."""
    _check_pair(n, m)
    head = tuple(range(1, m + 1))
    return minimalize(n, (head + (i,) for i in range(m + 1, n + 1)))


def family_alpha(n: int, m: int) -> AlphaVector:
    _check_pair(n, m)
    values = tuple(comb(n, j) - (comb(n - m, j - m) if j > m else 0) for j in range(n + 1))
    return AlphaVector(n=n, values=values)


def family_beta(n: int, m: int, q: int, k: int) -> int:
    _check_pair(n, m)
    if not 0 <= k <= q <= n:
        raise DomainError(f"expected 0 <= k <= q <= n, got n={n}, q={q}, k={k}")
    return (
        generalized_binom(n - q + k - 1, k)
        - generalized_binom(n - q + k - 1 - m, k - m)
        + (-1) ** ((k - m) % 2) * generalized_binom(q - m, k - m)
    )


def _row_is_nonnegative(n: int, m: int, q: int, odd_only: bool) -> bool:
    if odd_only:
        degrees: Iterable[int] = range(m + 1, q + 1, 2)
    else:
        degrees = range(q + 1)
    return all(family_beta(n, m, q, k) >= 0 for k in degrees)


def family_hdepth_quotient(n: int, m: int, odd_only: bool = False, bisect: bool = False) -> int:
    """
    hdepth(S/I_{n,m}) from the closed-form rows.

    ``odd_only`` restricts every row to m <= k with k-m odd, the only entries
    that can be negative. ``bisect`` binary-searches q instead of scanning down
    from n; both rely on row nonnegativity being monotone in q.
    """
    _check_pair(n, m)
    if bisect:
        low, high = 0, n
        while low < high:
            middle = (low + high + 1) // 2
            if _row_is_nonnegative(n, m, middle, odd_only):
                low = middle
            else:
                high = middle - 1
        return low
    for q in range(n, -1, -1):
        if _row_is_nonnegative(n, m, q, odd_only):
            return q
    raise AssertionError("unreachable")


def family_hdepth_ideal(n: int, m: int) -> int:
    _check_pair(n, m)
    return (n + m + 1) // 2


def family_record(n: int, m: int, odd_only: bool = False, bisect: bool = False) -> FamilyRecord:
    q = family_hdepth_quotient(n, m, odd_only=odd_only, bisect=bisect)
    h_ideal = family_hdepth_ideal(n, m)
    return FamilyRecord(n=n, m=m, q=q, h_ideal=h_ideal, d=q - h_ideal)


def family_table(pairs: Sequence[Tuple[int, int]] = REFERENCE_PAIRS) -> List[FamilyRecord]:
    return [family_record(n, m, odd_only=True) for n, m in pairs]


def _records_for(n: int) -> List[FamilyRecord]:
    return [family_record(n, m, odd_only=True, bisect=True) for m in range(1, n)]


def _sweep(n_cap: int, jobs: int) -> Iterator[FamilyRecord]:
    """Records in lexicographic (n, m) order, n = 2..n_cap."""
    n_values = range(2, n_cap + 1)
    if jobs <= 1:
        for n in n_values:
            yield from _records_for(n)
        return
    batch = 4 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        for start in range(0, len(n_values), batch):
            for records in executor.map(_records_for, n_values[start:start + batch]):
                yield from records


def sweep_witnesses(d_max: int, n_cap: int = 400, jobs: Optional[int] = None) -> Dict[int, FamilyRecord]:
    """First record of every gap d = 0..d_max in one lexicographic sweep up to ``n_cap``."""
    if d_max < 0:
        raise DomainError(f"d_max must be nonnegative, got {d_max}")
    found: Dict[int, FamilyRecord] = {}
    for record in _sweep(n_cap, jobs if jobs is not None else HDEPTH_SETTINGS.jobs):
        if 0 <= record.d <= d_max and record.d not in found:
            LOGGER.info(f"gap {record.d} first reached at (n, m) = ({record.n}, {record.m}), q = {record.q}")
            found[record.d] = record
            if len(found) == d_max + 1:
                break
    return dict(sorted(found.items()))


def minimal_witness(d: int, n_cap: int, jobs: Optional[int] = None) -> Optional[FamilyRecord]:
    """The lexicographically first (n, m) with d(n, m) = d, or None within ``n_cap``."""
    if d < 0:
        raise DomainError(f"d must be nonnegative, got {d}")
    for record in _sweep(n_cap, jobs if jobs is not None else HDEPTH_SETTINGS.jobs):
        if record.d == d:
            return record
    LOGGER.warning(f"no (n, m) with gap {d} for n <= {n_cap}")
    return None


__all__ = [
    "REFERENCE_PAIRS",
    "family_ideal",
    "family_alpha",
    "family_beta",
    "family_hdepth_quotient",
    "family_hdepth_ideal",
    "family_record",
    "family_table",
    "sweep_witnesses",
    "minimal_witness",
]
