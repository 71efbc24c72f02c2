"""
Exact binomial arithmetic, Macaulay representations and Kruskal-Katona bounds.

Everything here works on Python integers, so no value ever overflows.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Tuple

from hilbert_depth.entities.macaulay import MacaulayRep
from hilbert_depth.exceptions import DomainError


def binom(n: int, k: int) -> int:
    """C(n, k) for n, k >= 0; zero when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binom expects nonnegative arguments, got ({n}, {k})")
    return comb(n, k)


def generalized_binom(a: int, b: int) -> int:
    """
    Falling-factorial binomial a(a-1)...(a-b+1)/b!, zero for b < 0.

    Agrees with ``binom`` for a >= 0; for a < 0 it equals (-1)^b C(b-a-1, b).
    """
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    return (-1) ** b * comb(b - a - 1, b)


def chu_vandermonde_check(n: int, q: int, k: int) -> Tuple[int, int]:
    if not 0 <= k <= q <= n:
        raise DomainError(f"expected 0 <= k <= q <= n, got n={n}, q={q}, k={k}")
    lhs = sum((-1) ** (k - j) * comb(q - j, k - j) * comb(n, j) for j in range(k + 1))
    rhs = generalized_binom(n - q + k - 1, k)
    return lhs, rhs


def _largest_top(remainder: int, index: int) -> int:
    """max{t : C(t, index) <= remainder}, for remainder >= 1."""
    high = index
    while comb(high, index) <= remainder:
        high *= 2
    low = high // 2
    # C(low, index) <= remainder < C(high, index)
    while high - low > 1:
        middle = (low + high) // 2
        if comb(middle, index) <= remainder:
            low = middle
        else:
            high = middle
    return low


@lru_cache(maxsize=1 << 16)
def macaulay_rep(N: int, k: int) -> MacaulayRep:
    if k < 1:
        raise DomainError(f"Macaulay representations need k >= 1, got {k}")
    if N < 0:
        raise DomainError(f"cannot represent negative N={N}")
    terms = []
    remainder = N
    index = k
    while remainder > 0:
        top = _largest_top(remainder, index)
        terms.append((top, index))
        remainder -= comb(top, index)
        index -= 1
    return MacaulayRep(k=k, terms=tuple(terms))


def kk_lower_bound(rep: MacaulayRep) -> int:
    """
    Least possible alpha_{k-1} given alpha_k = rep.value.

    The cascade reads C(n_k, k) + C(n_{k-1}, k-1) + ...; a printed C(n_{k-1}, n_{k-1}) second term is a misprint.
    """
    if rep.k < 2:
        raise DomainError(f"the lower shadow bound needs k >= 2, got {rep.k}")
    return sum(comb(top, index - 1) for top, index in rep.terms)


def kk_upper_bound(rep: MacaulayRep) -> int:
    """Largest possible alpha_{k+1} given alpha_k = rep.value."""
    return sum(comb(top, index + 1) for top, index in rep.terms)


__all__ = [
    "binom",
    "generalized_binom",
    "chu_vandermonde_check",
    "macaulay_rep",
    "kk_lower_bound",
    "kk_upper_bound",
]
