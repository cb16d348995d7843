"""Frames of discernment and bitmask subset algebra.

A subset of a frame is an ``int`` whose bit ``i`` is set when the frame's
``i``-th element belongs to the subset.  Key ``0`` is the empty set and key
``2**n - 1`` is the whole frame.  Keys do not carry their frame; containers
(mass functions, views) do, and cross-frame operations are rejected there.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import (
    DuplicateElement,
    EmptyElementName,
    EmptyFrame,
    FrameTooLarge,
    InvalidSubset,
    UnknownElement,
)

MAX_ELEMENTS = 24

SubsetKey = int


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment; element ``i`` owns bit ``i``."""

    elements: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if not elements:
            raise EmptyFrame("a frame needs at least one element")
        if len(elements) > MAX_ELEMENTS:
            raise FrameTooLarge(
                f"frame has {len(elements)} elements; at most {MAX_ELEMENTS} are supported"
            )
        index: dict[str, int] = {}
        for i, name in enumerate(elements):
            if not isinstance(name, str) or not name:
                raise EmptyElementName(f"element {i} has an empty or non-string name")
            if name in index:
                raise DuplicateElement(f"duplicate element {name!r}")
            index[name] = i
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        """Number of subsets, ``2**n``."""
        return 1 << len(self.elements)

    @property
    def full(self) -> SubsetKey:
        """Key of the whole frame."""
        return (1 << len(self.elements)) - 1

    def bit(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"{name!r} is not an element of the frame") from None

    def check(self, key: SubsetKey) -> SubsetKey:
        """Return ``key`` unchanged if it is a valid subset of this frame."""
        if isinstance(key, bool) or not isinstance(key, int) or not 0 <= key <= self.full:
            raise InvalidSubset(f"{key!r} is not a subset key of a {self.n}-element frame")
        return key

    def members(self, key: SubsetKey) -> list[str]:
        """Element names of ``key`` in bit order."""
        self.check(key)
        return [name for i, name in enumerate(self.elements) if key >> i & 1]

    def format(self, key: SubsetKey) -> str:
        """Render a subset as ``{a,b}``; the empty set is ``{}``."""
        return "{" + ",".join(self.members(key)) + "}"


def make_frame(names: Sequence[str]) -> Frame:
    return Frame(tuple(names))


def subset_from_elements(frame: Frame, names: Iterable[str]) -> SubsetKey:
    key = 0
    for name in names:
        key |= 1 << frame.bit(name)
    return key


def complement(frame: Frame, a: SubsetKey) -> SubsetKey:
    return frame.full ^ frame.check(a)


def intersect(a: SubsetKey, b: SubsetKey) -> SubsetKey:
    return a & b


def is_subset(a: SubsetKey, b: SubsetKey) -> bool:
    return a & ~b == 0


def popcount(a: SubsetKey) -> int:
    return bin(a).count("1")
