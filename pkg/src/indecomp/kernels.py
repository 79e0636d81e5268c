"""Backend selection for the bitset kernels.

The compiled extension is preferred when importable; the numpy fallback is
always available. INDECOMP_KERNEL=py|c forces a backend, and use_backend()
overrides it temporarily (the benchmark uses this to compare the two).
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

from . import _closure_py

try:
    from . import _closure as _closure_c
except ImportError:
    _closure_c = None

_forced: str | None = None


def has_compiled() -> bool:
    return _closure_c is not None


def default_backend() -> str:
    if _forced is not None:
        return _forced
    env = os.environ.get("INDECOMP_KERNEL")
    if env in ("py", "c"):
        return env
    return "c" if has_compiled() else "py"


@contextmanager
def use_backend(name: str):
    """Force a backend within the context; 'c' requires the extension."""
    global _forced
    if name not in ("py", "c"):
        raise ValueError(f"unknown kernel backend {name!r}")
    if name == "c" and not has_compiled():
        raise RuntimeError("compiled kernel is not available")
    prev = _forced
    _forced = name
    try:
        yield
    finally:
        _forced = prev


class PyKernel:
    """Numpy-backed kernel bound to one Cayley table."""

    backend = "py"

    def __init__(self, table: np.ndarray, inverse: np.ndarray):
        self.table = table
        self.inverse = inverse
        self.n = table.shape[0]

    def close(self, mask: int) -> int:
        return _closure_py.close_mask(self.table, mask, self.n)

    def coset(self, g: int, mask: int, right: bool = False) -> int:
        return _closure_py.coset_mask(self.table, mask, g, right, self.n)

    def conjugate(self, mask: int, g: int) -> int:
        ginv = int(self.inverse[g])
        return _closure_py.conjugate_mask(self.table, mask, g, ginv, self.n)

    def product(self, a: int, b: int) -> int:
        return _closure_py.product_mask(self.table, a, b, self.n)

    def is_closed(self, mask: int) -> bool:
        return _closure_py.is_closed_mask(self.table, mask, self.n)


class CKernel:
    """Compiled kernel bound to one Cayley table; masks convert at the edge."""

    backend = "c"

    def __init__(self, table: np.ndarray, inverse: np.ndarray):
        self.table = table
        self.inverse = inverse
        self.n = table.shape[0]
        self._nbytes = (self.n + 7) >> 3

    def _b(self, mask: int) -> bytes:
        return mask.to_bytes(self._nbytes, "little")

    def close(self, mask: int) -> int:
        out = _closure_c.close_mask(self.table, self._b(mask), self.n)
        return int.from_bytes(out, "little")

    def coset(self, g: int, mask: int, right: bool = False) -> int:
        out = _closure_c.coset_mask(self.table, self._b(mask), g, right, self.n)
        return int.from_bytes(out, "little")

    def conjugate(self, mask: int, g: int) -> int:
        ginv = int(self.inverse[g])
        out = _closure_c.conjugate_mask(self.table, self._b(mask), g, ginv, self.n)
        return int.from_bytes(out, "little")

    def product(self, a: int, b: int) -> int:
        out = _closure_c.product_mask(self.table, self._b(a), self._b(b), self.n)
        return int.from_bytes(out, "little")

    def is_closed(self, mask: int) -> bool:
        return bool(_closure_c.is_closed_mask(self.table, self._b(mask), self.n))


def make_kernel(table: np.ndarray, inverse: np.ndarray):
    if default_backend() == "c":
        return CKernel(table, inverse)
    return PyKernel(table, inverse)
