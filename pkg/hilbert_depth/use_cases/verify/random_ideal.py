from __future__ import annotations

from typing import Callable
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

import numpy as np

from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.exceptions import DomainError
from hilbert_depth.exceptions import SamplingError
from hilbert_depth.use_cases.ideal_operations import minimalize

Seed = Union[int, Sequence[int], np.random.Generator]


def random_ideal(
    n: int,
    gen_count_range: Tuple[int, int],
    degree_range: Tuple[int, int],
    seed: Seed,
    accept: Optional[Callable[[SquarefreeIdeal], bool]] = None,
    max_attempts: int = 100,
) -> SquarefreeIdeal:
    """
    Sample generator supports with degrees uniform in ``degree_range`` and minimalize.

    A fixed seed gives the same ideal on every run. Samples rejected by
    ``accept`` are redrawn up to ``max_attempts`` times.
    """
    low_count, high_count = gen_count_range
    low_degree, high_degree = degree_range
    if not 1 <= low_count <= high_count:
        raise DomainError(f"generator count range {gen_count_range} must satisfy 1 <= low <= high")
    if not 1 <= low_degree <= high_degree <= n:
        raise DomainError(f"degree range {degree_range} must lie within [1, {n}]")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(max_attempts):
        count = int(rng.integers(low_count, high_count, endpoint=True))
        supports = [
            (rng.choice(n, size=int(rng.integers(low_degree, high_degree, endpoint=True)), replace=False) + 1).tolist()
            for _ in range(count)
        ]
        ideal = minimalize(n, supports)
        if accept is None or accept(ideal):
            return ideal
    raise SamplingError(f"no acceptable ideal in {max_attempts} attempts (n={n})")
