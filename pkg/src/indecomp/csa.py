"""Malnormality, CSA, and commutative-transitivity for finite groups.

The interesting empirical fact these support: no finite non-abelian group is
CSA, which the corpus sweep confirms at every order within the cap.
"""

from __future__ import annotations

import numpy as np

from .core import FiniteGroup, Subgroup
from .lattice import maximal_abelian_subgroups


def is_malnormal(A: Subgroup, G: FiniteGroup) -> tuple[bool, int | None]:
    """A is malnormal iff A meets each conjugate gAg^-1 (g outside A) only at
    the identity. Returns a violating g on failure."""
    if A.parent is not G:
        raise ValueError("subgroup does not belong to the given group")
    kern = G.kernel
    for g in range(1, G.order):
        if A.mask >> g & 1:
            continue
        if kern.conjugate(A.mask, g) & A.mask != 1:
            return False, g
    return True, None


def is_csa(G: FiniteGroup) -> tuple[bool, tuple[Subgroup, int] | None]:
    """Every maximal abelian subgroup malnormal; witness is (A, g) otherwise."""
    for A in maximal_abelian_subgroups(G):
        ok, g = is_malnormal(A, G)
        if not ok:
            return False, (A, g)
    return True, None


def is_commutative_transitive(G: FiniteGroup) -> bool:
    """Every nontrivial element has an abelian centralizer."""
    comm = G.commuting_matrix()
    for g in range(1, G.order):
        el = np.flatnonzero(comm[g])
        if not comm[np.ix_(el, el)].all():
            return False
    return True
