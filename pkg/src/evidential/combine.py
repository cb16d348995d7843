"""Dempster's rule of combination (the orthogonal sum)."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import lattice
from .errors import EmptyOperandList, TotalConflict
from .evidence import (
    FOCAL_EPS,
    MassFunction,
    commonality_table,
    mass_from_raw,
    same_frame,
)

CONFLICT_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class CombinationResult:
    """Combined mass plus the normalization constant ``N`` and conflict ``K = 1 - N``."""

    mass: MassFunction
    normalization: float
    conflict: float


def _focal_arrays(m: MassFunction) -> tuple[np.ndarray, np.ndarray]:
    keys = np.flatnonzero(m.table > FOCAL_EPS)
    return keys, m.table[keys]


def conjunctive_table(tables: Sequence[np.ndarray]) -> np.ndarray:
    """Unnormalized conjunctive combination of dense mass tables.

    Entry ``A`` of the result is the sum of ``m1(X1)...mk(Xk)`` over all
    tuples of focal elements whose intersection is ``A``; entry 0 is the
    conflict mass.  Only focal elements are visited.
    """
    acc = np.asarray(tables[0], dtype=np.float64)
    size = acc.shape[0]
    for table in tables[1:]:
        ka = np.flatnonzero(acc > 0.0)
        kb = np.flatnonzero(np.asarray(table) > FOCAL_EPS)
        inter = np.bitwise_and.outer(ka, kb).ravel()
        weights = np.multiply.outer(acc[ka], table[kb]).ravel()
        acc = np.bincount(inter, weights=weights, minlength=size)
    return acc


def _normalize(m: MassFunction, unnormalized: np.ndarray) -> CombinationResult:
    unnormalized = unnormalized.copy()
    unnormalized[0] = 0.0
    n = float(unnormalized.sum())
    if n <= CONFLICT_EPS:
        raise TotalConflict()
    return CombinationResult(mass_from_raw(m.frame, unnormalized / n), n, 1.0 - n)


def dempster_pair(m1: MassFunction, m2: MassFunction) -> CombinationResult:
    """Combine two mass functions by summing products over focal-element pairs."""
    same_frame(m1, m2)
    return _normalize(m1, conjunctive_table([m1.table, m2.table]))


def dempster_via_commonality(m1: MassFunction, m2: MassFunction) -> CombinationResult:
    """Combine in commonality space, where the orthogonal sum is a pointwise product.

    The Möbius inverse of ``com1 * com2`` is the unnormalized conjunctive
    mass; its ∅ entry is the conflict.  Dense, ``O(n 2^n)``.
    """
    same_frame(m1, m2)
    raw = lattice.superset_mobius(commonality_table(m1) * commonality_table(m2))
    k = float(raw[0])
    n = 1.0 - k
    if n <= CONFLICT_EPS:
        raise TotalConflict()
    raw[0] = 0.0
    return CombinationResult(mass_from_raw(m1.frame, raw / n), n, k)


def conflict(m1: MassFunction, m2: MassFunction) -> float:
    """Conflict mass ``K``; returns 1.0 for totally conflicting evidence instead of raising."""
    same_frame(m1, m2)
    k = float(conjunctive_table([m1.table, m2.table])[0])
    return min(max(k, 0.0), 1.0)


def dempster_n(ms: Sequence[MassFunction]) -> CombinationResult:
    """Left fold of :func:`dempster_pair` over ``ms``.

    The reported normalization is the single-shot n-ary constant
    ``sum over X1 ∩ ... ∩ Xn != ∅ of m1(X1)...mn(Xn)``.
    """
    ms = list(ms)
    if not ms:
        raise EmptyOperandList("dempster_n needs at least one mass function")
    same_frame(*ms)
    if len(ms) == 1:
        return CombinationResult(ms[0], 1.0, 0.0)
    mass = reduce(lambda acc, m: dempster_pair(acc, m).mass, ms[1:], ms[0])
    joint = conjunctive_table([m.table for m in ms])
    n = float(joint[1:].sum())
    return CombinationResult(mass, n, 1.0 - n)
