"""Mass functions and the four derived evidential views.

Everything is tabulated densely over the powerset: ``table[A]`` holds the
value at the subset with bitmask ``A``.  Tables are read-only once wrapped.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from numbers import Real

import numpy as np

from . import lattice
from .errors import (
    DuplicateFocalElement,
    FrameMismatch,
    InvalidKind,
    InvalidMass,
    InvalidRate,
    MassOnEmptySet,
    NegativeMass,
    NotAMassFunction,
    SumNotOne,
)
from .frame import Frame, SubsetKey

SUM_TOL = 1e-9
NEG_TOL = 1e-12
FOCAL_EPS = 1e-12
INVERSION_TOL = 1e-6


class Kind(str, Enum):
    BELIEF = "belief"
    PLAUSIBILITY = "plausibility"
    COMMONALITY = "commonality"
    DOUBT = "doubt"

    @property
    def short(self) -> str:
        return _SHORT[self]

    @classmethod
    def parse(cls, value: Kind | str) -> Kind:
        """Accept a ``Kind``, its full name, or the short forms bel/pls/com/dou."""
        if isinstance(value, Kind):
            return value
        key = str(value).strip().lower()
        for kind in cls:
            if key in (kind.value, _SHORT[kind]):
                return kind
        raise InvalidKind(f"unknown evidential function kind {value!r}")


_SHORT = {
    Kind.BELIEF: "bel",
    Kind.PLAUSIBILITY: "pls",
    Kind.COMMONALITY: "com",
    Kind.DOUBT: "dou",
}


def _readonly(table: np.ndarray) -> np.ndarray:
    table.flags.writeable = False
    return table


def _as_table(frame: Frame, table) -> np.ndarray:
    arr = np.array(table, dtype=np.float64)
    if arr.shape != (frame.size,):
        raise InvalidMass(f"expected a table of {frame.size} entries, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class MassFunction:
    """A normalized mass function on a frame, stored as a dense table.

    Construction validates the invariants: ``m(∅) == 0``, no entry below
    ``-1e-12`` (smaller negative dust is clamped to zero) and a total within
    ``1e-9`` of one.
    """

    frame: Frame
    table: np.ndarray

    def __post_init__(self) -> None:
        t = _as_table(self.frame, self.table)
        if not np.all(np.isfinite(t)):
            raise InvalidMass("mass values must be finite")
        if t[0] != 0.0:
            raise MassOnEmptySet(f"m(∅) must be 0, got {t[0]!r}")
        low = t.min()
        if low < -NEG_TOL:
            key = int(t.argmin())
            raise NegativeMass(f"negative mass {low!r} at {self.frame.format(key)}")
        if t.max() > 1.0 + NEG_TOL:
            key = int(t.argmax())
            raise InvalidMass(f"mass {t[key]!r} above 1 at {self.frame.format(key)}")
        np.maximum(t, 0.0, out=t)
        total = math.fsum(t)
        if abs(total - 1.0) > SUM_TOL:
            raise SumNotOne(f"masses sum to {total!r}, not 1")
        object.__setattr__(self, "table", _readonly(t))

    def __getitem__(self, key: SubsetKey) -> float:
        return float(self.table[self.frame.check(key)])

    def __repr__(self) -> str:
        body = ", ".join(f"{self.frame.format(k)}: {v:.6g}" for k, v in focal_elements(self))
        return f"MassFunction({body})"

    def focal_elements(self) -> list[tuple[SubsetKey, float]]:
        return focal_elements(self)

    def theta_mass(self) -> float:
        return float(self.table[-1])


@dataclass(frozen=True, eq=False)
class EvidentialView:
    """A belief, plausibility, commonality or doubt function tabulated over 2^Θ."""

    frame: Frame
    kind: Kind
    table: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        t = _as_table(self.frame, self.table)
        object.__setattr__(self, "table", _readonly(t))

    def __getitem__(self, key: SubsetKey) -> float:
        return float(self.table[self.frame.check(key)])


@dataclass(frozen=True)
class DiscountRate:
    """A discount rate ``α`` with ``0 < α < 1``."""

    value: float

    def __post_init__(self) -> None:
        try:
            value = float(self.value)
        except (TypeError, ValueError):
            raise InvalidRate(f"discount rate must be a number, got {self.value!r}") from None
        if not 0.0 < value < 1.0:
            raise InvalidRate(f"discount rate must satisfy 0 < α < 1, got {value!r}")
        object.__setattr__(self, "value", value)

    def __float__(self) -> float:
        return self.value


def as_rate(alpha: DiscountRate | Real) -> float:
    """Validate ``alpha`` and return it as a plain float."""
    if isinstance(alpha, DiscountRate):
        return alpha.value
    return DiscountRate(alpha).value


def same_frame(*items) -> Frame:
    frame = items[0].frame
    for other in items[1:]:
        if other.frame != frame:
            raise FrameMismatch(f"frames differ: {frame.elements} vs {other.frame.elements}")
    return frame


def make_mass(
    frame: Frame,
    assignments: Mapping[SubsetKey, float] | Iterable[tuple[SubsetKey, float]],
) -> MassFunction:
    """Build a mass function from ``(subset, mass)`` pairs; unlisted subsets get 0."""
    if isinstance(assignments, Mapping):
        assignments = assignments.items()
    table = np.zeros(frame.size)
    seen: set[int] = set()
    for key, value in assignments:
        frame.check(key)
        if key in seen:
            raise DuplicateFocalElement(f"{frame.format(key)} listed more than once")
        seen.add(key)
        value = float(value)
        if not math.isfinite(value):
            raise InvalidMass(f"mass of {frame.format(key)} is not finite")
        if key == 0 and value != 0.0:
            raise MassOnEmptySet(f"m(∅) must be 0, got {value!r}")
        if value < 0.0:
            raise NegativeMass(f"negative mass {value!r} at {frame.format(key)}")
        table[key] = value
    return MassFunction(frame, table)


def vacuous(frame: Frame) -> MassFunction:
    """Total ignorance: all mass on the whole frame."""
    table = np.zeros(frame.size)
    table[-1] = 1.0
    return MassFunction(frame, table)


def categorical(frame: Frame, key: SubsetKey) -> MassFunction:
    table = np.zeros(frame.size)
    table[frame.check(key)] = 1.0
    return MassFunction(frame, table)


def mass_from_raw(frame: Frame, raw: np.ndarray, tol: float = INVERSION_TOL) -> MassFunction:
    """Turn a numerically computed table into a mass function.

    Tolerates round-off up to ``tol``: residual mass on ∅ and small negative
    entries are zeroed and the result is renormalized.  Anything larger raises
    :class:`NotAMassFunction`.
    """
    raw = np.array(raw, dtype=np.float64)
    if abs(raw[0]) > tol:
        raise NotAMassFunction(f"inversion puts mass {raw[0]:.3g} on the empty set")
    raw[0] = 0.0
    if raw.min() < -tol:
        key = int(raw.argmin())
        raise NotAMassFunction(f"inversion gives mass {raw[key]:.3g} at {frame.format(key)}")
    np.maximum(raw, 0.0, out=raw)
    total = math.fsum(raw)
    if abs(total - 1.0) > tol:
        raise NotAMassFunction(f"inverted masses sum to {total!r}")
    return MassFunction(frame, raw / total)


def belief_table(m: MassFunction) -> np.ndarray:
    return lattice.subset_zeta(m.table.copy())


def commonality_table(m: MassFunction) -> np.ndarray:
    return lattice.superset_zeta(m.table.copy())


def to_view(m: MassFunction, kind: Kind | str) -> EvidentialView:
    """Tabulate one of the derived evidential functions of ``m``.

    Reversing a table indexed by bitmask maps ``A`` to its complement, so the
    plausibility and doubt functions come straight from the belief table.
    """
    kind = Kind.parse(kind)
    if kind is Kind.COMMONALITY:
        table = commonality_table(m)
    else:
        bel = belief_table(m)
        if kind is Kind.BELIEF:
            table = bel
        elif kind is Kind.DOUBT:
            table = bel[::-1].copy()
        else:
            table = 1.0 - bel[::-1]
    return EvidentialView(m.frame, kind, table)


def from_view(v: EvidentialView) -> MassFunction:
    """Recover the mass function behind a view by Möbius inversion."""
    t = v.table
    if v.kind is Kind.COMMONALITY:
        raw = lattice.superset_mobius(t.copy())
    else:
        if v.kind is Kind.BELIEF:
            bel = t.copy()
        elif v.kind is Kind.DOUBT:
            bel = t[::-1].copy()
        else:
            # bel(A) = pls(Θ) - pls(Ā)
            bel = t[-1] - t[::-1]
        raw = lattice.subset_mobius(bel)
    return mass_from_raw(v.frame, raw)


def focal_elements(m: MassFunction) -> list[tuple[SubsetKey, float]]:
    """Subsets carrying mass above ``1e-12``, in increasing key order."""
    keys = np.flatnonzero(m.table > FOCAL_EPS)
    return [(int(k), float(m.table[k])) for k in keys]
