"""Closed-form results for the two orders of discounting and combining.

``discounted_sum_*`` evaluate ``(m1 ⊕ m2)^α`` (combine, then discount) and
``sum_of_discounted_*`` evaluate ``m1^α ⊕ m2^α`` (discount, then combine)
directly from the undiscounted inputs, without materializing the
intermediate step.  The two generally differ; :func:`compare_orders`
measures by how much.

Where a formula involves ``sum over X ∩ Y ⊆ A``, the pairs with an empty
intersection are excluded: that mass is conflict and is never part of a
combined belief.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .combine import CONFLICT_EPS, conjunctive_table
from .errors import EmptyOperandList, TotalConflict
from .evidence import (
    DiscountRate,
    Kind,
    MassFunction,
    as_rate,
    focal_elements,
    mass_from_raw,
    same_frame,
    to_view,
)
from .frame import SubsetKey

GAP_TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OrderComparison:
    """Both orders of discount and combination, and where they differ most.

    ``max_abs_gap`` is measured on the ``kind`` tables (mass by default);
    ``witness`` is the lowest subset key whose gap is within ``1e-12`` of it.
    """

    discounted_sum: MassFunction
    sum_of_discounted: MassFunction
    max_abs_gap: float
    witness: SubsetKey
    kind: str = "mass"


def _normalization(joint: np.ndarray) -> float:
    n = float(joint[1:].sum())
    if n <= CONFLICT_EPS:
        raise TotalConflict()
    return n


def discounted_sum_mass_n(ms: Sequence[MassFunction], alpha: DiscountRate | float) -> MassFunction:
    """``(m1 ⊕ ... ⊕ mn)^α`` in one shot over tuples of focal elements.

    Proper non-empty subsets get ``(1-α) S(A) / N`` where ``S(A)`` sums the
    products ``m1(X1)...mn(Xn)`` with ``X1 ∩ ... ∩ Xn = A`` and ``N`` sums
    them over non-empty intersections.  Θ gets ``(1-α) Π mi(Θ) / N + α``.
    """
    ms = list(ms)
    if not ms:
        raise EmptyOperandList("need at least one mass function")
    frame = same_frame(*ms)
    a = as_rate(alpha)
    joint = conjunctive_table([m.table for m in ms])
    n = _normalization(joint)
    out = (1.0 - a) * joint / n
    out[0] = 0.0
    out[-1] = (1.0 - a) * float(np.prod([m.table[-1] for m in ms])) / n + a
    return mass_from_raw(frame, out)


def discounted_sum_mass(m1: MassFunction, m2: MassFunction, alpha: DiscountRate | float) -> MassFunction:
    """``(m1 ⊕ m2)^α`` evaluated from ``m1`` and ``m2`` directly."""
    return discounted_sum_mass_n([m1, m2], alpha)


def _sum_of_discounted(m1: MassFunction, m2: MassFunction, a: float) -> tuple[np.ndarray, float]:
    same_frame(m1, m2)
    joint = conjunctive_table([m1.table, m2.table])
    n = float(joint[1:].sum())
    # always >= 2α - α² > 0, so the discounted pair can never totally conflict
    n_alpha = (1.0 - a) ** 2 * n + 2.0 * a - a * a
    out = ((1.0 - a) ** 2 * joint + a * (1.0 - a) * (m1.table + m2.table)) / n_alpha
    out[0] = 0.0
    t1, t2 = m1.table[-1], m2.table[-1]
    out[-1] = ((1.0 - a) ** 2 * t1 * t2 + a * (1.0 - a) * (t1 + t2) + a * a) / n_alpha
    return out, n_alpha


def sum_of_discounted_mass(m1: MassFunction, m2: MassFunction, alpha: DiscountRate | float) -> MassFunction:
    """``m1^α ⊕ m2^α`` evaluated from ``m1`` and ``m2`` directly."""
    out, _ = _sum_of_discounted(m1, m2, as_rate(alpha))
    return mass_from_raw(m1.frame, out)


def sum_of_discounted_normalization(
    m1: MassFunction, m2: MassFunction, alpha: DiscountRate | float
) -> float:
    """``N_α = (1-α)² N + 2α - α²``, the normalization of ``m1^α ⊕ m2^α``."""
    return _sum_of_discounted(m1, m2, as_rate(alpha))[1]


_BOUNDARIES = {
    Kind.BELIEF: {"empty": 0.0, "full": 1.0},
    Kind.PLAUSIBILITY: {"empty": 0.0, "full": 1.0},
    Kind.COMMONALITY: {"empty": 1.0},
    Kind.DOUBT: {"empty": 1.0, "full": 0.0},
}


def _read(mass: MassFunction, kind: Kind, subset: SubsetKey) -> float:
    frame = mass.frame
    frame.check(subset)
    fixed = _BOUNDARIES[kind]
    if subset == 0 and "empty" in fixed:
        return fixed["empty"]
    if subset == frame.full and "full" in fixed:
        return fixed["full"]
    return to_view(mass, kind)[subset]


def discounted_sum_eval(
    kind: Kind | str,
    ms: Sequence[MassFunction],
    alpha: DiscountRate | float,
    subset: SubsetKey,
) -> float:
    """Value at ``subset`` of the discounted orthogonal sum of the ``kind`` functions."""
    kind = Kind.parse(kind)
    return _read(discounted_sum_mass_n(ms, alpha), kind, subset)


def sum_of_discounted_eval(
    kind: Kind | str,
    m1: MassFunction,
    m2: MassFunction,
    alpha: DiscountRate | float,
    subset: SubsetKey,
) -> float:
    """Value at ``subset`` of the orthogonal sum of the discounted ``kind`` functions.

    Belief uses the pairwise closed formula
    (:func:`sum_of_discounted_belief_formula`); the other kinds transform
    :func:`sum_of_discounted_mass`.
    """
    kind = Kind.parse(kind)
    if kind is Kind.BELIEF:
        return sum_of_discounted_belief_formula(m1, m2, alpha, subset)
    return _read(sum_of_discounted_mass(m1, m2, alpha), kind, subset)


def _pair_sums(m1: MassFunction, m2: MassFunction, subset: SubsetKey) -> tuple[float, float]:
    """(sum of m1(X)m2(Y) over ∅ != X∩Y ⊆ subset, over X∩Y != ∅)."""
    inside = total = 0.0
    f2 = focal_elements(m2)
    for x, mx in focal_elements(m1):
        for y, my in f2:
            z = x & y
            if z:
                total += mx * my
                if z & ~subset == 0:
                    inside += mx * my
    return inside, total


def discounted_sum_belief_formula(
    m1: MassFunction, m2: MassFunction, alpha: DiscountRate | float, subset: SubsetKey
) -> float:
    """``(bel1 ⊕ bel2)^α(A) = (1-α) * sum_{∅ != X∩Y ⊆ A} m1(X)m2(Y) / N`` for ∅ ⊂ A ⊂ Θ."""
    frame = same_frame(m1, m2)
    a = as_rate(alpha)
    frame.check(subset)
    inside, n = _pair_sums(m1, m2, subset)
    if n <= CONFLICT_EPS:
        raise TotalConflict()
    if subset == 0:
        return 0.0
    if subset == frame.full:
        return 1.0
    return (1.0 - a) * inside / n


def sum_of_discounted_belief_formula(
    m1: MassFunction, m2: MassFunction, alpha: DiscountRate | float, subset: SubsetKey
) -> float:
    """``(bel1^α ⊕ bel2^α)(A)`` for ∅ ⊂ A ⊂ Θ::

        ((1-α)² sum_{∅ != X∩Y ⊆ A} m1(X)m2(Y) + α(1-α)(bel1(A) + bel2(A))) / N_α
    """
    frame = same_frame(m1, m2)
    a = as_rate(alpha)
    frame.check(subset)
    if subset == 0:
        return 0.0
    if subset == frame.full:
        return 1.0
    inside, n = _pair_sums(m1, m2, subset)
    own = sum(v for z, v in focal_elements(m1) if z & ~subset == 0)
    own += sum(v for z, v in focal_elements(m2) if z & ~subset == 0)
    n_alpha = (1.0 - a) ** 2 * n + 2.0 * a - a * a
    return ((1.0 - a) ** 2 * inside + a * (1.0 - a) * own) / n_alpha


def compare_orders(
    m1: MassFunction,
    m2: MassFunction,
    alpha: DiscountRate | float,
    kind: Kind | str = "mass",
) -> OrderComparison:
    """Evaluate both orders and locate the largest pointwise difference.

    ``kind`` selects which table the gap is measured on: ``"mass"`` or any
    evidential view kind.
    """
    ds = discounted_sum_mass(m1, m2, alpha)
    sd = sum_of_discounted_mass(m1, m2, alpha)
    if kind == "mass":
        name = "mass"
        left, right = ds.table, sd.table
    else:
        kind = Kind.parse(kind)
        name = kind.value
        left, right = to_view(ds, kind).table, to_view(sd, kind).table
    gaps = np.abs(left - right)
    top = float(gaps.max())
    witness = int(np.flatnonzero(gaps >= top - GAP_TIE_TOL)[0])
    return OrderComparison(ds, sd, top, witness, name)
