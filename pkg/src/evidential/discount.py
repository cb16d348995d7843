"""Discounting evidence by a rate α, on mass functions and on derived views."""

from __future__ import annotations

import numpy as np

from .evidence import (
    DiscountRate,
    EvidentialView,
    Kind,
    MassFunction,
    as_rate,
)


def discount_mass(m: MassFunction, alpha: DiscountRate | float) -> MassFunction:
    """Scale every proper subset's mass by ``1 - α`` and move the removed mass to Θ.

    The result always has ``m(Θ) >= α``.
    """
    a = as_rate(alpha)
    table = (1.0 - a) * m.table
    table[-1] += a
    return MassFunction(m.frame, table)


def discount_view(v: EvidentialView, alpha: DiscountRate | float) -> EvidentialView:
    """Discount a view directly, without going back through the mass function.

    ====================  =====================  ==================
    kind                  general entries        fixed entry
    ====================  =====================  ==================
    belief                ``(1-α) bel(A)``       ``bel(Θ) = 1``
    plausibility          ``(1-α) pls(A) + α``   ``pls(∅) = 0``
    commonality           ``(1-α) com(A) + α``   (none)
    doubt                 ``(1-α) dou(A)``       ``dou(∅) = 1``
    ====================  =====================  ==================
    """
    a = as_rate(alpha)
    table = (1.0 - a) * v.table
    if v.kind is Kind.BELIEF:
        table[-1] = 1.0
    elif v.kind is Kind.PLAUSIBILITY:
        table += a
        table[0] = 0.0
    elif v.kind is Kind.COMMONALITY:
        table += a
    else:
        table[0] = 1.0
    return EvidentialView(v.frame, v.kind, np.asarray(table))


def compose_rates(alpha1: DiscountRate | float, alpha2: DiscountRate | float) -> DiscountRate:
    """The single rate equivalent to discounting by ``alpha1`` and then ``alpha2``.

    ``1 - (1 - α1)(1 - α2)``; symmetric in its arguments.  Note this is not
    the product ``α1 α2``.
    """
    a1, a2 = as_rate(alpha1), as_rate(alpha2)
    return DiscountRate(1.0 - (1.0 - a1) * (1.0 - a2))
