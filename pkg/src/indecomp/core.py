"""Concrete finite groups: validated Cayley tables and subgroup masks.

Elements are dense indices 0..order-1 with the identity fixed at index 0;
everything downstream (masks, lattices, classifiers) speaks indices only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .bits import iter_bits, mask_from_array, mask_to_array
from .limits import ORDER_CAP
from .numth import factorize

ASSOC_EXHAUSTIVE_BOUND = 512


class FiniteGroup:
    """A finite group given by an explicit, validated multiplication table."""

    def __init__(
        self,
        table: np.ndarray,
        *,
        element_names: Sequence[str] | None = None,
        generator_hint: Sequence[int] | None = None,
        name: str | None = None,
        check: bool = True,
        exhaustive_bound: int = ASSOC_EXHAUSTIVE_BOUND,
    ):
        table = np.ascontiguousarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError(f"table must be square, got shape {table.shape}")
        self.order: int = int(table.shape[0])
        self.table = table
        self.table.setflags(write=False)
        if check:
            _validate_table(table, exhaustive_bound)
        self.inverse = np.ascontiguousarray(
            (table == 0).argmax(axis=1), dtype=np.int32
        )
        self.inverse.setflags(write=False)
        if check and not np.array_equal(table[self.inverse, np.arange(self.order)],
                                        np.zeros(self.order, dtype=np.int32)):
            raise ValueError("left and right inverses disagree")
        self.element_names = tuple(element_names) if element_names is not None else None
        if self.element_names is not None and len(self.element_names) != self.order:
            raise ValueError("element_names length does not match order")
        self.generator_hint = tuple(generator_hint) if generator_hint else None
        self.name = name
        self._kernels: dict[str, object] = {}
        self._orders: np.ndarray | None = None
        self._commuting: np.ndarray | None = None
        self._gens: tuple[int, ...] | None = None
        self._lattice = None
        self._strongly = None

    # -- plumbing ---------------------------------------------------------

    def __repr__(self) -> str:
        tag = self.name or "group"
        return f"<FiniteGroup {tag} order={self.order}>"

    @property
    def kernel(self):
        backend = kernels.default_backend()
        k = self._kernels.get(backend)
        if k is None:
            k = kernels.make_kernel(self.table, self.inverse)
            self._kernels[backend] = k
        return k

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def element_name(self, g: int) -> str:
        if self.element_names is not None:
            return self.element_names[g]
        return str(g)

    def _check_index(self, g: int) -> int:
        g = int(g)
        if not 0 <= g < self.order:
            raise IndexError(f"element index {g} out of range for order {self.order}")
        return g

    # -- elementwise operations -------------------------------------------

    def multiply(self, g: int, h: int) -> int:
        return int(self.table[self._check_index(g), self._check_index(h)])

    def inv(self, g: int) -> int:
        return int(self.inverse[self._check_index(g)])

    def element_orders(self) -> np.ndarray:
        """Vector of element orders (computed once, cached)."""
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            orders[0] = 1
            power = np.arange(n)
            k = 1
            while (orders == 0).any():
                k += 1
                power = self.table[power, np.arange(n)]
                hit = (power == 0) & (orders == 0)
                orders[hit] = k
            orders.setflags(write=False)
            self._orders = orders
        return self._orders

    def element_order(self, g: int) -> int:
        return int(self.element_orders()[self._check_index(g)])

    def commuting_matrix(self) -> np.ndarray:
        if self._commuting is None:
            c = self.table == self.table.T
            c.setflags(write=False)
            self._commuting = c
        return self._commuting

    def is_abelian(self) -> bool:
        return bool(self.commuting_matrix().all())

    # -- subgroups ----------------------------------------------------------

    def subgroup(self, mask: int, *, check: bool = False) -> Subgroup:
        if mask & 1 == 0:
            raise ValueError("subgroup mask must contain the identity (bit 0)")
        if mask >> self.order:
            raise ValueError("subgroup mask has bits beyond the group order")
        if check and not self.kernel.is_closed(mask):
            raise ValueError("mask is not closed under multiplication")
        return Subgroup(self, mask, mask.bit_count())

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, 1, 1)

    def whole_subgroup(self) -> Subgroup:
        return Subgroup(self, self.full_mask, self.order)

    def generated_subgroup(self, gens: Iterable[int]) -> Subgroup:
        seed = 1
        for g in gens:
            seed |= 1 << self._check_index(g)
        return self.subgroup(self.kernel.close(seed))

    def cyclic_subgroup_mask(self, g: int) -> int:
        g = self._check_index(g)
        mask = 1
        x = g
        while x != 0:
            mask |= 1 << x
            x = int(self.table[x, g])
        return mask

    def center(self) -> Subgroup:
        flags = self.commuting_matrix().all(axis=1)
        mask = int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")
        return self.subgroup(mask)

    def centralizer(self, g: int) -> Subgroup:
        flags = self.commuting_matrix()[self._check_index(g)]
        mask = int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")
        return self.subgroup(mask)

    def generating_set(self) -> tuple[int, ...]:
        """Small generating set, greedily picking the highest-order element."""
        if self._gens is None:
            orders = self.element_orders()
            mask = 1
            gens: list[int] = []
            while mask != self.full_mask:
                best = -1
                best_order = 0
                for g in range(1, self.order):
                    if mask >> g & 1:
                        continue
                    if int(orders[g]) > best_order:
                        best = g
                        best_order = int(orders[g])
                gens.append(best)
                mask = self.kernel.close(mask | 1 << best)
            self._gens = tuple(gens)
        return self._gens

    # -- commutators and solvability ----------------------------------------

    def commutator_subgroup_mask(self, amask: int, bmask: int) -> int:
        """Mask of the subgroup generated by all [a, b], a in A, b in B."""
        n = self.order
        a_el = mask_to_array(amask, n)
        b_el = mask_to_array(bmask, n)
        ab = self.table[np.ix_(a_el, b_el)]
        ba = self.table[np.ix_(b_el, a_el)]
        comm = self.table[ab, self.inverse[ba.T]]
        seed = mask_from_array(comm.ravel(), n) | 1
        return self.kernel.close(seed)

    def derived_series(self) -> list[Subgroup]:
        masks = [self.full_mask]
        while True:
            nxt = self.commutator_subgroup_mask(masks[-1], masks[-1])
            if nxt == masks[-1]:
                break
            masks.append(nxt)
            if nxt == 1:
                break
        return [self.subgroup(m) for m in masks]

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].size == 1

    def is_nilpotent(self) -> bool:
        """All Sylow subgroups normal; tested as 'p-elements form a subgroup'.

        For each prime p the Sylow p-subgroup is unique (normal) exactly when
        the set of p-power-order elements is multiplication-closed.
        """
        orders = self.element_orders()
        for p in factorize(self.order):
            flags = np.zeros(self.order, dtype=bool)
            for g in range(self.order):
                o = int(orders[g])
                while o % p == 0:
                    o //= p
                flags[g] = o == 1
            mask = int.from_bytes(
                np.packbits(flags, bitorder="little").tobytes(), "little"
            )
            if not self.kernel.is_closed(mask):
                return False
        return True


@dataclass(frozen=True)
class Subgroup:
    """Subset of a parent group's elements, closed under the operation."""

    parent: FiniteGroup = field(repr=False)
    mask: int
    size: int

    def __repr__(self) -> str:
        return f"<Subgroup size={self.size} of order {self.parent.order}>"

    def elements(self) -> list[int]:
        return list(iter_bits(self.mask))

    def element_array(self) -> np.ndarray:
        return mask_to_array(self.mask, self.parent.order)

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def is_whole(self) -> bool:
        return self.size == self.parent.order

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask

    def conjugate(self, g: int) -> "Subgroup":
        """The subgroup g*H*g^-1."""
        g = self.parent._check_index(g)
        return Subgroup(self.parent, self.parent.kernel.conjugate(self.mask, g), self.size)

    def is_normal(self) -> bool:
        """Normal in the full parent group."""
        k = self.parent.kernel
        return all(
            k.conjugate(self.mask, g) == self.mask for g in self.parent.generating_set()
        )

    def is_abelian(self) -> bool:
        el = self.element_array()
        return bool(self.parent.commuting_matrix()[np.ix_(el, el)].all())

    def generating_set(self) -> tuple[int, ...]:
        """Greedy generating set of this subgroup (indices in the parent)."""
        orders = self.parent.element_orders()
        k = self.parent.kernel
        mask = 1
        gens: list[int] = []
        while mask != self.mask:
            best = -1
            best_order = 0
            for g in iter_bits(self.mask & ~mask):
                if int(orders[g]) > best_order:
                    best = g
                    best_order = int(orders[g])
            gens.append(best)
            mask = k.close(mask | 1 << best)
        return tuple(gens)

    def as_group(self) -> FiniteGroup:
        """Re-index this subgroup as a standalone FiniteGroup."""
        parent = self.parent
        elems = self.element_array()
        pos = np.zeros(parent.order, dtype=np.int32)
        pos[elems] = np.arange(self.size, dtype=np.int32)
        sub = pos[parent.table[np.ix_(elems, elems)]]
        names = None
        if parent.element_names is not None:
            names = [parent.element_names[int(e)] for e in elems]
        tag = parent.name or "group"
        return FiniteGroup(sub, element_names=names, name=f"{tag}-sub{self.size}")


def _validate_table(table: np.ndarray, exhaustive_bound: int) -> None:
    n = table.shape[0]
    if n < 1:
        raise ValueError("group order must be at least 1")
    if n > ORDER_CAP:
        raise ValueError(f"group order {n} exceeds the cap of {ORDER_CAP}")
    if table.min() < 0 or table.max() >= n:
        raise ValueError("table entries out of range")
    idx = np.arange(n, dtype=np.int32)
    if not np.array_equal(table[0], idx) or not np.array_equal(table[:, 0], idx):
        raise ValueError("index 0 is not a two-sided identity")
    if not (np.array_equal(np.sort(table, axis=1), np.tile(idx, (n, 1)))
            and np.array_equal(np.sort(table, axis=0), np.tile(idx, (n, 1)).T)):
        raise ValueError("table is not a Latin square")
    if not (table == 0).any(axis=1).all():
        raise ValueError("some element has no inverse")
    if n <= exhaustive_bound:
        for c in range(n):
            col = table[:, c]
            lhs = col[table]
            rhs = table[:, col]
            if not np.array_equal(lhs, rhs):
                raise ValueError("multiplication table is not associative")
    else:
        rng = np.random.default_rng(0)
        m = 10 * n * n
        a = rng.integers(0, n, m)
        b = rng.integers(0, n, m)
        c = rng.integers(0, n, m)
        if not np.array_equal(table[table[a, b], c], table[a, table[b, c]]):
            raise ValueError("multiplication table failed sampled associativity")
