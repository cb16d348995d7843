"""In-place O(n 2^n) sum transforms over the subset lattice.

Each function takes a contiguous float array of length ``2**n`` indexed by
subset bitmask and overwrites it.  Processing one bit at a time, the array is
viewed as ``(high, 2, low)`` so that axis 1 is the bit being folded.
"""

from __future__ import annotations

import numpy as np


def _bit_count(table: np.ndarray) -> int:
    size = table.shape[0]
    if size == 0 or size & (size - 1):
        raise ValueError(f"table length {size} is not a power of two")
    return size.bit_length() - 1


def _planes(table: np.ndarray, bit: int) -> tuple[np.ndarray, np.ndarray]:
    view = table.reshape(-1, 2, 1 << bit)
    return view[:, 0, :], view[:, 1, :]


def subset_zeta(table: np.ndarray) -> np.ndarray:
    """``f(A) <- sum_{B <= A} f(B)``."""
    for bit in range(_bit_count(table)):
        without, with_ = _planes(table, bit)
        with_ += without
    return table


def subset_mobius(table: np.ndarray) -> np.ndarray:
    """Inverse of :func:`subset_zeta`."""
    for bit in range(_bit_count(table)):
        without, with_ = _planes(table, bit)
        with_ -= without
    return table


def superset_zeta(table: np.ndarray) -> np.ndarray:
    """``f(A) <- sum_{B >= A} f(B)``."""
    for bit in range(_bit_count(table)):
        without, with_ = _planes(table, bit)
        without += with_
    return table


def superset_mobius(table: np.ndarray) -> np.ndarray:
    """Inverse of :func:`superset_zeta`."""
    for bit in range(_bit_count(table)):
        without, with_ = _planes(table, bit)
        without -= with_
    return table
