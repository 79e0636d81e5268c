"""Numpy fallback for the compiled bitset kernels.

Same contracts as _closure.pyx but masks stay Python ints; the closure uses a
level-wise frontier so the inner products run as vectorized gathers.
"""

from __future__ import annotations

import numpy as np

from .bits import mask_from_array, mask_to_array


def close_mask(table: np.ndarray, mask: int, n: int) -> int:
    member = np.zeros(n, dtype=bool)
    member[mask_to_array(mask, n)] = True
    known = np.flatnonzero(member)
    frontier = known
    while frontier.size:
        prods = np.concatenate(
            (
                table[np.ix_(frontier, known)].ravel(),
                table[np.ix_(known, frontier)].ravel(),
            )
        )
        prods = np.unique(prods)
        new = prods[~member[prods]]
        if new.size == 0:
            break
        member[new] = True
        known = np.flatnonzero(member)
        frontier = new
    return int.from_bytes(np.packbits(member, bitorder="little").tobytes(), "little")


def coset_mask(table: np.ndarray, mask: int, g: int, right: bool, n: int) -> int:
    elems = mask_to_array(mask, n)
    out = table[elems, g] if right else table[g, elems]
    return mask_from_array(out, n)


def conjugate_mask(table: np.ndarray, mask: int, g: int, ginv: int, n: int) -> int:
    elems = mask_to_array(mask, n)
    return mask_from_array(table[table[g, elems], ginv], n)


def product_mask(table: np.ndarray, a: int, b: int, n: int) -> int:
    ael = mask_to_array(a, n)
    bel = mask_to_array(b, n)
    return mask_from_array(table[np.ix_(ael, bel)].ravel(), n)


def is_closed_mask(table: np.ndarray, mask: int, n: int) -> bool:
    elems = mask_to_array(mask, n)
    member = np.zeros(n, dtype=bool)
    member[elems] = True
    return bool(member[table[np.ix_(elems, elems)]].all())
