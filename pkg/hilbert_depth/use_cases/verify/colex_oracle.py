from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional
from typing import Set
from typing import Tuple

from hilbert_depth import LOGGER
from hilbert_depth.entities.verification import OracleMismatch
from hilbert_depth.entities.verification import OracleReport
from hilbert_depth.exceptions import CapacityError
from hilbert_depth.exceptions import DomainError
from hilbert_depth.settings import HDEPTH_SETTINGS
from hilbert_depth.use_cases.combinatorics import kk_lower_bound
from hilbert_depth.use_cases.combinatorics import kk_upper_bound
from hilbert_depth.use_cases.combinatorics import macaulay_rep


def _check_scale(k: int, n: int, max_n: Optional[int], max_k: Optional[int]) -> None:
    max_n = max_n if max_n is not None else HDEPTH_SETTINGS.oracle_max_n
    max_k = max_k if max_k is not None else HDEPTH_SETTINGS.oracle_max_k
    if n > max_n:
        raise CapacityError(f"colex oracle limited to n <= {max_n}, got {n}", max_n)
    if k > max_k:
        raise CapacityError(f"colex oracle limited to k <= {max_k}, got {k}", max_k)
    if not 1 <= k <= n:
        raise DomainError(f"expected 1 <= k <= n, got k={k}, n={n}")


@lru_cache(maxsize=64)
def _profile(k: int, n: int) -> Tuple[Tuple[int, int], ...]:
    # bitmasks with k bits in increasing order are the k-subsets in colex order
    layer = sorted(sum(1 << i for i in subset) for subset in combinations(range(n), k))
    family: Set[int] = set()
    shadow: Set[int] = set()
    upper = 0
    profile = []
    for member in layer:
        family.add(member)
        bits = [1 << i for i in range(n) if member >> i & 1]
        shadow.update(member ^ bit for bit in bits)
        # (k+1)-sets through member whose k-subsets are now all present
        for extra in range(n):
            if member >> extra & 1:
                continue
            grown = member | 1 << extra
            if all(grown ^ bit in family for bit in bits):
                upper += 1
        profile.append((len(shadow), upper))
    return tuple(profile)


def colex_shadow_profile(
    k: int,
    n: int,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
) -> Tuple[Tuple[int, int], ...]:
    """(lower shadow, upper co-shadow) sizes of the first N colex k-subsets of {1..n}, for N = 1..C(n,k)."""
    _check_scale(k, n, max_n, max_k)
    return _profile(k, n)


def colex_shadow_oracle(
    N: int,
    k: int,
    n: int,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
) -> Tuple[int, int]:
    _check_scale(k, n, max_n, max_k)
    if not 1 <= N <= comb(n, k):
        raise DomainError(f"N={N} outside 1..C({n},{k})")
    return _profile(k, n)[N - 1]


def kruskal_katona_oracle_check(n_max: int, k_max: int) -> OracleReport:
    """Compare both shadow bounds with the colex oracle for every n <= n_max, k <= k_max, N <= C(n,k)."""
    report = OracleReport(n_max=n_max, k_max=k_max)
    for n in range(1, n_max + 1):
        for k in range(1, min(k_max, n) + 1):
            for count, (lower, upper) in enumerate(colex_shadow_profile(k, n), start=1):
                rep = macaulay_rep(count, k)
                predicted = kk_upper_bound(rep)
                if predicted != upper:
                    report.mismatches.append(
                        OracleMismatch(n=n, k=k, count=count, bound="upper", colex=upper, macaulay=predicted),
                    )
                if k >= 2:
                    predicted = kk_lower_bound(rep)
                    if predicted != lower:
                        report.mismatches.append(
                            OracleMismatch(n=n, k=k, count=count, bound="lower", colex=lower, macaulay=predicted),
                        )
                report.checked += 1
    for mismatch in report.mismatches:
        LOGGER.error(f"Kruskal-Katona mismatch: {mismatch}")
    LOGGER.info(f"colex oracle compared {report.checked} families, {len(report.mismatches)} mismatches")
    return report
