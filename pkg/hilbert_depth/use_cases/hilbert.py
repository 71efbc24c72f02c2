"""
Beta rows and the Hilbert depth of a module from its alpha-vector.

beta_k^q = sum_{j=0}^{k} (-1)^{k-j} C(q-j, k-j) alpha_j, and hdepth is the
largest q whose whole row is nonnegative. Since
beta_k^q = beta_k^{q+1} + beta_{k-1}^q, a nonnegative row at q+1 forces a
nonnegative row at q, so scanning down from n stops at the answer.
"""

from __future__ import annotations

from math import comb
from typing import List
from typing import Sequence

from hilbert_depth import LOGGER
from hilbert_depth.entities.alpha_vector import AlphaVector
from hilbert_depth.entities.beta_table import BetaTable
from hilbert_depth.entities.beta_table import FailureCertificate
from hilbert_depth.entities.beta_table import HdepthResult
from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.combinatorics import generalized_binom


def beta_values(alpha_values: Sequence[int], q: int) -> List[int]:
    """The raw row beta_0^q..beta_q^q for any integer sequence with at least q+1 entries."""
    if q < 0 or q >= len(alpha_values):
        raise DomainError(f"q={q} outside 0..{len(alpha_values) - 1}")
    return [
        sum((-1) ** (k - j) * comb(q - j, k - j) * alpha_values[j] for j in range(k + 1))
        for k in range(q + 1)
    ]


def beta_entry(alpha_values: Sequence[int], q: int, k: int) -> int:
    """beta_k^q alone; only alpha_0..alpha_k are read."""
    if not 0 <= k <= q or k >= len(alpha_values):
        raise DomainError(f"beta_{k}^{q} needs 0 <= k <= q and alpha_0..alpha_{k}")
    return sum((-1) ** (k - j) * comb(q - j, k - j) * alpha_values[j] for j in range(k + 1))


def beta_table(alpha: AlphaVector, q: int) -> BetaTable:
    if not 0 <= q <= alpha.n:
        raise DomainError(f"q={q} outside 0..{alpha.n}")
    return BetaTable(n=alpha.n, q=q, values=tuple(beta_values(alpha.values, q)))


def hdepth(alpha: AlphaVector) -> HdepthResult:
    if alpha.is_zero:
        raise DomainError("the zero module has no Hilbert depth")
    certificates: List[FailureCertificate] = []
    for q in range(alpha.n, -1, -1):
        row = beta_table(alpha, q)
        k = row.first_negative()
        if k is None:
            LOGGER.info(f"hdepth = {q} for alpha = {list(alpha.values)}")
            return HdepthResult(hdepth=q, witness_beta=row, failure_certificates=certificates[::-1])
        LOGGER.debug(f"q={q} fails: beta_{k}^{q} = {row.values[k]}")
        certificates.append(FailureCertificate(q=q, k=k, value=row.values[k]))
    # beta_0^0 = alpha_0 >= 0, so the scan always stops
    raise AssertionError("unreachable")


def complement_alpha(alpha: AlphaVector) -> AlphaVector:
    """alpha(S/I) <-> alpha(I)."""
    return AlphaVector(n=alpha.n, values=tuple(comb(alpha.n, j) - value for j, value in enumerate(alpha.values)))


def beta_sum_identity_check(alphaS: AlphaVector, q: int) -> bool:
    """
    beta_k^q(S/I) + beta_k^q(I) = C(n-q+k-1, k) for every 0 <= k <= q.

    A printed difference form beta_k^q(I) = beta_k^q(S/I) - C(n-q+k-1, k) has the wrong sign; the sum form is used.
    """
    quotient = beta_table(alphaS, q).values
    ideal = beta_table(complement_alpha(alphaS), q).values
    return all(
        quotient[k] + ideal[k] == generalized_binom(alphaS.n - q + k - 1, k)
        for k in range(q + 1)
    )


def beta_row_recurrence_check(alpha: AlphaVector, q: int) -> bool:
    """beta_k^q = beta_k^{q+1} + beta_{k-1}^q for 1 <= k <= q."""
    if not 0 <= q < alpha.n:
        raise DomainError(f"the recurrence compares rows q and q+1, so q must lie in 0..{alpha.n - 1}")
    row = beta_values(alpha.values, q)
    above = beta_values(alpha.values, q + 1)
    return all(row[k] == above[k] + row[k - 1] for k in range(1, q + 1))


def hdepth_gap_criterion(alphaS: AlphaVector, ell: int) -> bool:
    """
    Decide hdepth(I) >= hdepth(S/I) - ell from alpha(S/I) alone.

    With q = hdepth(S/I) this holds exactly when
    beta_{k-ell}^{q-ell}(S/I) <= C(n-q+k-1, k-ell) for all ell <= k <= q.
    """
    if ell < 0:
        raise DomainError(f"ell must be nonnegative, got {ell}")
    q = hdepth(alphaS).hdepth
    if ell > q:
        return True
    row = beta_values(alphaS.values, q - ell)
    return all(
        row[k - ell] <= generalized_binom(alphaS.n - q + k - 1, k - ell)
        for k in range(ell, q + 1)
    )


__all__ = [
    "beta_values",
    "beta_entry",
    "beta_table",
    "hdepth",
    "complement_alpha",
    "beta_sum_identity_check",
    "beta_row_recurrence_check",
    "hdepth_gap_criterion",
]
