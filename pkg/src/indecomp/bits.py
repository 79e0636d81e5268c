"""Dense bitmask helpers.

Subgroups are stored as Python ints used as bitsets over element indices
0..n-1 (bit i set = element i present). Python ints give word-parallel
and/or/xor for free and hash cheaply, which is what the lattice code leans on.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np


def mask_from_array(indices: np.ndarray, n: int) -> int:
    """Bitmask from a numpy index array (order and duplicates irrelevant)."""
    flags = np.zeros(n, dtype=bool)
    flags[indices] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def mask_to_array(mask: int, n: int) -> np.ndarray:
    """Sorted numpy array of the set bit positions."""
    nbytes = (n + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    flags = np.unpackbits(raw, bitorder="little")[:n]
    return np.flatnonzero(flags)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
