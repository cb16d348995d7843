"""Random mass functions for randomized testing and benchmarks."""

from __future__ import annotations

import numpy as np

from .evidence import MassFunction
from .frame import Frame


def random_mass(
    frame: Frame,
    rng: np.random.Generator,
    *,
    max_focal: int | None = None,
    dense: bool = False,
) -> MassFunction:
    """Draw a mass function with a random focal support and Dirichlet weights.

    The support is a uniformly random set of non-empty subsets (at most
    ``max_focal`` of them); ``dense=True`` uses every non-empty subset.
    """
    candidates = frame.size - 1
    if dense:
        keys = np.arange(1, frame.size)
    else:
        limit = candidates if max_focal is None else min(max_focal, candidates)
        count = int(rng.integers(1, limit + 1))
        keys = rng.choice(np.arange(1, frame.size), size=count, replace=False)
    weights = rng.dirichlet(np.ones(len(keys)))
    table = np.zeros(frame.size)
    table[keys] = weights
    table /= table.sum()
    return MassFunction(frame, table)
