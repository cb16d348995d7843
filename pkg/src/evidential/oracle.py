"""Brute-force reference implementations.

Slow on purpose: every quantity is computed straight from its defining sum
by looping over the powerset.  Nothing here reuses the lattice transforms or
the focal-pair combination code, so agreement between the two is evidence
that both are right.
"""

from __future__ import annotations

from .errors import TotalConflict
from .evidence import Kind, MassFunction, as_rate, same_frame
from .frame import SubsetKey


def oracle_transform(m: MassFunction, kind: Kind | str, subset: SubsetKey) -> float:
    kind = Kind.parse(kind)
    frame = m.frame
    a = frame.check(subset)
    not_a = frame.full & ~a
    total = 0.0
    for x in range(frame.size):
        if kind is Kind.BELIEF:
            hit = x & ~a == 0
        elif kind is Kind.PLAUSIBILITY:
            hit = x & a != 0
        elif kind is Kind.COMMONALITY:
            hit = a & ~x == 0
        else:
            hit = x & ~not_a == 0
        if hit:
            total += float(m.table[x])
    return total


def oracle_dempster(m1: MassFunction, m2: MassFunction) -> MassFunction:
    frame = same_frame(m1, m2)
    acc = [0.0] * frame.size
    for x in range(frame.size):
        for y in range(frame.size):
            acc[x & y] += float(m1.table[x]) * float(m2.table[y])
    n = sum(acc[1:])
    if n <= 1e-12:
        raise TotalConflict()
    return MassFunction(frame, [0.0] + [v / n for v in acc[1:]])


def oracle_discount(m: MassFunction, alpha: float) -> MassFunction:
    a = as_rate(alpha)
    frame = m.frame
    out = []
    for x in range(frame.size):
        if x == frame.full:
            out.append((1.0 - a) * float(m.table[x]) + a)
        else:
            out.append((1.0 - a) * float(m.table[x]))
    return MassFunction(frame, out)
