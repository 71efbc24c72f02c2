"""
Depth-first enumeration of alpha prefixes (alpha_2, ..., alpha_K) in the relaxed region.

Descending a degree uses the upper shadow bound alpha_{j+1} <= kk_upper(alpha_j)
together with beta_{j+1}^q >= 0, which reads alpha_{j+1} >= -(rest of the sum).
The lower shadow bound alpha_j >= kk_lower(alpha_{j+1}) filters each candidate.
"""

from __future__ import annotations

import time
from math import comb
from typing import Callable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from hilbert_depth import LOGGER
from hilbert_depth.entities.verification import FeasibleAlphaConstraints
from hilbert_depth.entities.verification import LemmaReport
from hilbert_depth.settings import HDEPTH_SETTINGS
from hilbert_depth.use_cases.combinatorics import kk_lower_bound
from hilbert_depth.use_cases.combinatorics import kk_upper_bound
from hilbert_depth.use_cases.combinatorics import macaulay_rep
from hilbert_depth.use_cases.hilbert import beta_values

AlphaVisitor = Callable[[Tuple[int, ...]], bool]


def _beta_rest(prefix: Sequence[int], q: int) -> int:
    """beta_j^q minus alpha_j, where j = len(prefix)."""
    j = len(prefix)
    return sum((-1) ** (j - i) * comb(q - i, j - i) * prefix[i] for i in range(j))


def satisfies_constraints(constraints: FeasibleAlphaConstraints, alpha: Sequence[int]) -> bool:
    """Membership of a prefix (alpha_0, ..., alpha_K) with K <= q in the relaxed region."""
    n, q = constraints.n, constraints.q
    if len(alpha) < 2 or len(alpha) > q + 1:
        return False
    if alpha[0] != 1 or alpha[1] != n:
        return False
    if any(not 0 <= value <= comb(n, j) for j, value in enumerate(alpha)):
        return False
    for j in range(1, len(alpha) - 1):
        if alpha[j + 1] > kk_upper_bound(macaulay_rep(alpha[j], j)):
            return False
        if alpha[j] < kk_lower_bound(macaulay_rep(alpha[j + 1], j + 1)):
            return False
    if constraints.beta_nonneg:
        # beta_k^q only involves alpha_0..alpha_k, so zero padding leaves the prefix row intact
        padded = list(alpha) + [0] * (q + 1 - len(alpha))
        return all(value >= 0 for value in beta_values(padded, q)[:len(alpha)])
    return True


class FeasibleAlphaEnumerator:
    def __init__(self, constraints: FeasibleAlphaConstraints, node_cap: Optional[int] = None):
        self.constraints = constraints
        self.node_cap = node_cap if node_cap is not None else HDEPTH_SETTINGS.node_cap
        self.explored = 0
        self.truncated = False

    def _candidates(self, prefix: List[int]) -> range:
        j = len(prefix)
        n, q = self.constraints.n, self.constraints.q
        high = min(comb(n, j), kk_upper_bound(macaulay_rep(prefix[-1], j - 1)))
        low = max(0, -_beta_rest(prefix, q)) if self.constraints.beta_nonneg else 0
        return range(low, high + 1)

    def _accepts(self, prefix: List[int], value: int) -> bool:
        j = len(prefix)
        return prefix[-1] >= kk_lower_bound(macaulay_rep(value, j))

    def _spend(self) -> bool:
        if self.explored >= self.node_cap:
            if not self.truncated:
                LOGGER.warning(f"DFS node cap {self.node_cap} reached, the result is partial")
            self.truncated = True
            return False
        self.explored += 1
        return True

    def _walk(self, prefix: List[int], depth: int, visitor: Callable[[Tuple[int, ...]], bool]) -> bool:
        """Visit every completion of ``prefix`` up to degree ``depth``; stop early when the visitor returns True."""
        if len(prefix) > depth:
            return visitor(tuple(prefix))
        for value in self._candidates(prefix):
            if not self._accepts(prefix, value):
                continue
            if not self._spend():
                return True
            prefix.append(value)
            stop = self._walk(prefix, depth, visitor)
            prefix.pop()
            if stop:
                return True
        return False

    def extends(self, prefix: Sequence[int]) -> bool:
        """Whether ``prefix`` completes to a feasible vector up to degree q."""
        found: List[bool] = []

        def record(_: Tuple[int, ...]) -> bool:
            found.append(True)
            return True

        self._walk(list(prefix), self.constraints.q, record)
        return bool(found)

    def run(self, visitor: AlphaVisitor, lemma_id: str = "custom", inequality: str = "") -> LemmaReport:
        constraints = self.constraints
        report = LemmaReport(
            lemma_id=lemma_id,
            n=constraints.n,
            q=constraints.q,
            inequality=inequality,
            weakened=not constraints.beta_nonneg,
        )
        started = time.perf_counter()

        def visit(alpha: Tuple[int, ...]) -> bool:
            report.feasible += 1
            if visitor(alpha) and (not constraints.extension_check or self.extends(alpha)):
                LOGGER.error(f"{lemma_id} violated at n={constraints.n} by alpha = {list(alpha)}")
                report.violations.append(alpha)
            return self.truncated

        self._walk([1, constraints.n], constraints.max_degree, visit)
        report.explored = self.explored
        report.truncated = self.truncated
        report.wall_time = time.perf_counter() - started
        return report


def enumerate_feasible_alphas(
    constraints: FeasibleAlphaConstraints,
    visitor: AlphaVisitor,
    node_cap: Optional[int] = None,
) -> LemmaReport:
    """
    Run ``visitor`` on every feasible prefix (alpha_0, ..., alpha_K).

    The visitor returns True when the vector violates whatever is being
    checked; such vectors are collected in the report.
    """
    return FeasibleAlphaEnumerator(constraints, node_cap).run(visitor)
