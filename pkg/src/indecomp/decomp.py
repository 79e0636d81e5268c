"""Direct-product decomposability, the brute-force oracle, and the
arithmetic classifier for groups all of whose subgroups are indecomposable.

classify() decides membership without enumerating subgroups (except to
produce a witness on the negative branch); is_strongly_indecomposable() is
the independent lattice-sweeping oracle the classifier is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .core import FiniteGroup, Subgroup
from .lattice import all_subgroups
from .numth import factorize, is_prime, multiplicative_order


@dataclass(frozen=True)
class CyclicPrimePower:
    """Cyclic of order p^n; the trivial group is the conventional (2, 0)."""

    p: int
    n: int

    variant = "CyclicPrimePower"

    def describe(self) -> str:
        return f"CyclicPrimePower(p={self.p}, n={self.n})"


@dataclass(frozen=True)
class GeneralizedQuaternion:
    n: int

    variant = "GeneralizedQuaternion"

    def describe(self) -> str:
        return f"GeneralizedQuaternion(n={self.n})"


@dataclass(frozen=True)
class MetacyclicPQ:
    p: int
    alpha: int
    q: int
    beta: int
    r: int

    variant = "MetacyclicPQ"

    def describe(self) -> str:
        return (
            f"MetacyclicPQ(p={self.p}, alpha={self.alpha}, q={self.q}, "
            f"beta={self.beta}, r={self.r})"
        )


@dataclass(frozen=True)
class DecompositionWitness:
    """A decomposable subgroup together with an internal direct-product split."""

    subgroup: Subgroup
    left: Subgroup
    right: Subgroup

    def describe(self) -> str:
        return (
            f"subgroup of order {self.subgroup.size} = "
            f"{self.left.size} x {self.right.size}"
        )


@dataclass(frozen=True)
class NotStronglyIndecomposable:
    witness: DecompositionWitness | None

    variant = "NotStronglyIndecomposable"

    def describe(self) -> str:
        if self.witness is None:
            return "NotStronglyIndecomposable(no witness)"
        return f"NotStronglyIndecomposable({self.witness.describe()})"


ClassLabel = Union[
    CyclicPrimePower, GeneralizedQuaternion, MetacyclicPQ, NotStronglyIndecomposable
]


def label_is_positive(label: ClassLabel) -> bool:
    return not isinstance(label, NotStronglyIndecomposable)


def label_to_json(label: ClassLabel) -> dict:
    out: dict = {"variant": label.variant}
    if isinstance(label, CyclicPrimePower):
        out.update(p=label.p, n=label.n)
    elif isinstance(label, GeneralizedQuaternion):
        out.update(n=label.n)
    elif isinstance(label, MetacyclicPQ):
        out.update(p=label.p, alpha=label.alpha, q=label.q, beta=label.beta, r=label.r)
    else:
        w = label.witness
        out["witness"] = (
            None
            if w is None
            else {
                "subgroup_order": w.subgroup.size,
                "factor_orders": [w.left.size, w.right.size],
            }
        )
    return out


def is_decomposable(H: Subgroup) -> tuple[Subgroup, Subgroup] | None:
    """Search for an internal direct-product split of H: nontrivial N1, N2
    normal in H with trivial intersection and |N1||N2| = |H|. Returns the
    (size, mask)-least pair, or None."""
    if H.size < 4:
        return None
    G = H.parent
    lat = all_subgroups(G)
    members = [s for s in lat.members_within(H.mask) if 1 < s.size < H.size]
    gens_h = H.generating_set()
    kern = G.kernel
    normal_cache: dict[int, bool] = {}

    def normal_in_h(s: Subgroup) -> bool:
        flag = normal_cache.get(s.mask)
        if flag is None:
            flag = all(kern.conjugate(s.mask, g) == s.mask for g in gens_h)
            normal_cache[s.mask] = flag
        return flag

    by_size: dict[int, list[Subgroup]] = {}
    for s in members:
        by_size.setdefault(s.size, []).append(s)
    for s1 in sorted(by_size):
        if s1 * s1 > H.size:
            break
        if H.size % s1 != 0:
            continue
        s2 = H.size // s1
        if s2 not in by_size:
            continue
        for n1 in by_size[s1]:
            if not normal_in_h(n1):
                continue
            for n2 in by_size[s2]:
                if n1.mask & n2.mask != 1:
                    continue
                if normal_in_h(n2):
                    return (n1, n2)
    return None


def is_strongly_indecomposable(
    G: FiniteGroup,
) -> tuple[bool, DecompositionWitness | None]:
    """Brute-force oracle: sweep every subgroup for a direct-product split.
    On failure returns the smallest decomposable subgroup as witness."""
    if G._strongly is not None:
        return G._strongly
    result: tuple[bool, DecompositionWitness | None] = (True, None)
    for H in all_subgroups(G).subgroups:
        pair = is_decomposable(H)
        if pair is not None:
            result = (False, DecompositionWitness(H, pair[0], pair[1]))
            break
    G._strongly = result
    return result


def is_generalized_quaternion(G: FiniteGroup) -> bool:
    """Order 2^n (n >= 3), non-cyclic, with a unique element of order 2."""
    n = G.order
    if n < 8 or n & (n - 1):
        return False
    orders = G.element_orders()
    if int((orders == 2).sum()) != 1:
        return False
    return int(orders.max()) != n


def check_metacyclic_condition(
    p: int, alpha: int, q: int, beta: int, r: int
) -> tuple[bool, str]:
    """The arithmetic criterion for Z/p^alpha x| Z/q^beta to have only
    indecomposable subgroups: q^beta divides p-1 and r has multiplicative
    order q^beta mod p. Returns (verdict, diagnostic)."""
    if not is_prime(p) or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if p == q:
        raise ValueError("p and q must be distinct")
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive")
    if not 0 < r < p**alpha:
        raise ValueError(f"r must satisfy 0 < r < p^alpha, got {r}")
    qb = q**beta
    if (p - 1) % qb != 0:
        return False, f"q^beta = {qb} does not divide p-1 = {p - 1}"
    if r % p == 0:
        return False, f"r = {r} is not a unit modulo p = {p}"
    d = multiplicative_order(r % p, p)
    if d != qb:
        return False, f"r has order {d} modulo p, expected q^beta = {qb}"
    return True, "ok"


def _try_metacyclic_pq(
    G: FiniteGroup, p: int, alpha: int, q: int, beta: int
) -> MetacyclicPQ | None:
    """Try to recognize G as a qualifying Z/p^alpha x| Z/q^beta."""
    orders = G.element_orders()
    pa, qb = p**alpha, q**beta
    p_count = 0
    for g in range(G.order):
        o = int(orders[g])
        while o % p == 0:
            o //= p
        if o == 1:
            p_count += 1
    if p_count != pa:
        return None  # Sylow p-subgroup not unique
    a0 = next((g for g in range(G.order) if int(orders[g]) == pa), None)
    if a0 is None:
        return None  # Sylow p-subgroup not cyclic
    b0 = next((g for g in range(G.order) if int(orders[g]) == qb), None)
    if b0 is None:
        return None  # Sylow q-subgroups not cyclic
    table = G.table
    # discrete log of b0^-1 a0 b0 in <a0>
    conj = int(table[int(table[G.inv(b0), a0]), b0])
    dlog: dict[int, int] = {}
    x, k = 0, 0
    while True:
        dlog[x] = k
        x = int(table[x, a0])
        k += 1
        if x == 0:
            break
    r0 = dlog.get(conj)
    if r0 is None or r0 == 0:
        return None
    ok, _ = check_metacyclic_condition(p, alpha, q, beta, r0)
    if not ok:
        return None
    # Generator choice only moves r within its power coset; fix the least.
    r = min(
        pow(r0, k, pa) for k in range(1, qb + 1) if math.gcd(k, q) == 1
    )
    return MetacyclicPQ(p, alpha, q, beta, r)


def classify(G: FiniteGroup) -> ClassLabel:
    """Arithmetic characterization of groups whose subgroups are all
    indecomposable; no lattice work on the positive branches."""
    n = G.order
    if n == 1:
        return CyclicPrimePower(2, 0)
    fact = factorize(n)
    orders = G.element_orders()
    cyclic = int(orders.max()) == n
    if len(fact) == 1:
        p, a = next(iter(fact.items()))
        if cyclic:
            return CyclicPrimePower(p, a)
        if p == 2 and a >= 3 and int((orders == 2).sum()) == 1:
            return GeneralizedQuaternion(a)
    elif len(fact) == 2:
        (p1, a1), (p2, a2) = fact.items()
        for (p, a), (q, b) in (((p1, a1), (p2, a2)), ((p2, a2), (p1, a1))):
            if p == 2:
                continue
            label = _try_metacyclic_pq(G, p, a, q, b)
            if label is not None:
                return label
    ok, witness = is_strongly_indecomposable(G)
    return NotStronglyIndecomposable(None if ok else witness)
