from __future__ import annotations

import re
from math import comb
from typing import Dict
from typing import Optional
from typing import Tuple

from hilbert_depth import LOGGER
from hilbert_depth.entities.verification import FeasibleAlphaConstraints
from hilbert_depth.entities.verification import LemmaReport
from hilbert_depth.entities.verification import LemmaStatement
from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.hilbert import beta_entry
from hilbert_depth.use_cases.verify.feasible_alphas import FeasibleAlphaEnumerator

FIXED_LEMMAS: Dict[str, Tuple[int, int]] = {
    "L3.3": (8, 4),
    "L3.4": (8, 5),
    "L3.5": (8, 6),
    "L3.6": (8, 7),
}

_FAMILY_PATTERN = re.compile(r"^(?P<family>L3\.2|L2\.4)-q(?P<q>\d+)$")
_FAMILY_RANGES = {"L3.2": (3, range(4, 11)), "L2.4": (4, range(5, 8))}


def lemma_statement(lemma_id: str) -> LemmaStatement:
    """
    Resolve a lemma id.

    L3.2-q<q> (4 <= q <= 10) bounds beta_3^{q-1}, L2.4-q<q> (5 <= q <= 7)
    bounds beta_4^{q-1}, and L3.3..L3.6 bound beta_4^7..beta_7^7 at q = 8.
    """
    if lemma_id in FIXED_LEMMAS:
        q, k = FIXED_LEMMAS[lemma_id]
        return LemmaStatement(lemma_id=lemma_id, q=q, k=k)
    match = _FAMILY_PATTERN.match(lemma_id)
    if match:
        k, allowed = _FAMILY_RANGES[match["family"]]
        q = int(match["q"])
        if q in allowed:
            return LemmaStatement(lemma_id=lemma_id, q=q, k=k)
    raise DomainError(f"unknown lemma id {lemma_id!r}; known: {', '.join(known_lemma_ids())}")


def known_lemma_ids() -> Tuple[str, ...]:
    family_ids = tuple(
        f"{family}-q{q}" for family, (_, allowed) in _FAMILY_RANGES.items() for q in allowed
    )
    return family_ids + tuple(FIXED_LEMMAS)


def certify_lemma(
    lemma_id: str,
    n: int,
    node_cap: Optional[int] = None,
    weaken: bool = False,
    extension_check: bool = True,
) -> LemmaReport:
    """
    Search the relaxed region for alpha-vectors breaking the lemma's inequality.

    ``weaken`` drops every beta >= 0 constraint, which must turn up violations.
    """
    statement = lemma_statement(lemma_id)
    q, k = statement.q, statement.k
    if n < q + 2:
        raise DomainError(f"{lemma_id} concerns non-principal ideals, so n >= {q + 2}; got n={n}")
    bound = comb(n - q + k, k)
    constraints = FeasibleAlphaConstraints(
        n=n,
        q=q,
        max_degree=k,
        beta_nonneg=not weaken,
        extension_check=extension_check,
    )

    def violates(alpha: Tuple[int, ...]) -> bool:
        return beta_entry(alpha, q - 1, k) > bound

    LOGGER.info(f"certifying {lemma_id}: {statement.inequality} at n={n}")
    report = FeasibleAlphaEnumerator(constraints, node_cap).run(
        violates,
        lemma_id=lemma_id,
        inequality=statement.inequality,
    )
    LOGGER.info(
        f"{lemma_id} at n={n}: {report.explored} nodes, {report.feasible} feasible vectors, "
        f"{len(report.violations)} violations, truncated={report.truncated}, {report.wall_time:.2f}s",
    )
    return report
