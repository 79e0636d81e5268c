"""Constructors for every group family used by the classifier and its corpus.

All constructors emit validated Cayley tables with identity at index 0 and
orders capped at 512.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .core import FiniteGroup
from .limits import ORDER_CAP
from .numth import is_prime


@dataclass(frozen=True)
class MetacyclicParams:
    """Parameters of <a, b | a^m = b^n = 1, b^-1 a b = a^r> with the
    classical side conditions making every Sylow subgroup cyclic."""

    m: int
    n: int
    r: int

    @property
    def order(self) -> int:
        return self.m * self.n

    def validate(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("metacyclic: m and n must be positive")
        if not 0 <= self.r < self.m:
            raise ValueError(f"metacyclic: r must satisfy 0 <= r < m, got r={self.r}")
        if self.m % 2 == 0:
            raise ValueError(f"metacyclic: m must be odd, got m={self.m}")
        if pow(self.r, self.n, self.m) != 1 % self.m:
            raise ValueError(
                f"metacyclic: r^n = {self.r}^{self.n} is not 1 mod {self.m}"
            )
        if math.gcd(self.m, self.n * (self.r - 1)) != 1:
            raise ValueError(
                "metacyclic: m and n*(r-1) are not coprime "
                f"(gcd({self.m}, {self.n * (self.r - 1)}) != 1)"
            )
        if self.order > ORDER_CAP:
            raise ValueError(f"metacyclic: order {self.order} exceeds {ORDER_CAP}")


@dataclass(frozen=True)
class SemidirectPQParams:
    """Parameters of Z/p^alpha semidirect Z/q^beta with action exponent r."""

    p: int
    alpha: int
    q: int
    beta: int
    r: int

    @property
    def order(self) -> int:
        return self.p**self.alpha * self.q**self.beta

    def validate(self) -> None:
        if not is_prime(self.p) or self.p % 2 == 0:
            raise ValueError(f"semidirect_pq: p must be an odd prime, got {self.p}")
        if not is_prime(self.q):
            raise ValueError(f"semidirect_pq: q must be prime, got {self.q}")
        if self.p == self.q:
            raise ValueError("semidirect_pq: p and q must differ")
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("semidirect_pq: alpha and beta must be positive")
        m = self.p**self.alpha
        if not 0 < self.r % m:
            raise ValueError("semidirect_pq: r must not be divisible by p^alpha")
        if pow(self.r, self.q**self.beta, m) != 1:
            raise ValueError(
                f"semidirect_pq: r^(q^beta) = {self.r}^{self.q**self.beta} "
                f"is not 1 mod {m}"
            )
        if self.order > ORDER_CAP:
            raise ValueError(f"semidirect_pq: order {self.order} exceeds {ORDER_CAP}")


def cyclic(n: int) -> FiniteGroup:
    """Z/n with additive notation."""
    if not 1 <= n <= ORDER_CAP:
        raise ValueError(f"cyclic: n must be in 1..{ORDER_CAP}, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    hint = [1] if n > 1 else None
    return FiniteGroup(table, name=f"C({n})", generator_hint=hint)


def generalized_quaternion(n: int) -> FiniteGroup:
    """Q_n of order 2^n: x^(2^(n-1)) = 1, y^2 = x^(2^(n-2)), y^-1 x y = x^-1.

    Elements are x^i y^j with index i + j*2^(n-1), so x is index 1 and the
    unique involution is x^(2^(n-2)).
    """
    if n < 3:
        raise ValueError(f"generalized_quaternion: n must be >= 3, got {n}")
    if 2**n > ORDER_CAP:
        raise ValueError(
            f"generalized_quaternion: order 2^{n} exceeds {ORDER_CAP}"
        )
    m = 2 ** (n - 1)
    size = 2 * m
    idx = np.arange(size)
    i, j = idx % m, idx // m
    sign = np.where(j == 1, -1, 1)
    res_i = (i[:, None] + sign[:, None] * i[None, :] + (j[:, None] * j[None, :]) * (m // 2)) % m
    res_j = (j[:, None] + j[None, :]) % 2
    table = res_i + res_j * m
    names = [f"x^{k}" for k in range(m)] + [f"x^{k}*y" for k in range(m)]
    names[0], names[1], names[m] = "e", "x", "y"
    return FiniteGroup(table, element_names=names, name=f"Q({n})", generator_hint=[1, m])


def _split_extension_table(m: int, n: int, r: int) -> np.ndarray:
    # (a^i b^j)(a^k b^l) = a^(i + k*r^j mod m) b^(j+l mod n); index = i*n + j.
    size = m * n
    idx = np.arange(size)
    i, j = idx // n, idx % n
    rp = np.ones(n, dtype=np.int64)
    for k in range(1, n):
        rp[k] = rp[k - 1] * r % m
    res_i = (i[:, None] + i[None, :] * rp[j][:, None]) % m
    res_j = (j[:, None] + j[None, :]) % n
    return res_i * n + res_j


def _split_extension_names(m: int, n: int) -> list[str]:
    names = []
    for i in range(m):
        for j in range(n):
            a = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            b = "" if j == 0 else ("b" if j == 1 else f"b^{j}")
            names.append("*".join(x for x in (a, b) if x) or "e")
    return names


def metacyclic(m: int, n: int, r: int) -> FiniteGroup:
    """Metacyclic group under the strict side conditions (m odd, r^n = 1 mod m,
    gcd(m, n(r-1)) = 1); rejects parameter triples violating any of them."""
    params = MetacyclicParams(m, n, r)
    params.validate()
    table = _split_extension_table(m, n, r)
    hint = []
    if m > 1:
        hint.append(n)
    if n > 1:
        hint.append(1)
    return FiniteGroup(
        table,
        element_names=_split_extension_names(m, n),
        name=f"M({m},{n},{r})",
        generator_hint=hint or None,
    )


def semidirect_pq(p: int, alpha: int, q: int, beta: int, r: int) -> FiniteGroup:
    """Z/p^alpha semidirect Z/q^beta; deliberately does not require the
    classifier's divisibility/faithfulness conditions, only r^(q^beta) = 1."""
    params = SemidirectPQParams(p, alpha, q, beta, r)
    params.validate()
    m, n = p**alpha, q**beta
    table = _split_extension_table(m, n, params.r % m)
    return FiniteGroup(
        table,
        element_names=_split_extension_names(m, n),
        name=f"PQ({p},{alpha},{q},{beta},{r})",
        generator_hint=[n, 1],
    )


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    size = G.order * H.order
    if size > ORDER_CAP:
        raise ValueError(f"direct_product: order {size} exceeds {ORDER_CAP}")
    nh = H.order
    idx = np.arange(size)
    a, b = idx // nh, idx % nh
    table = G.table[a[:, None], a[None, :]] * nh + H.table[b[:, None], b[None, :]]
    names = [f"({G.element_name(int(x))},{H.element_name(int(y))})" for x, y in zip(a, b)]
    gname = G.name or "?"
    hname = H.name or "?"
    return FiniteGroup(table, element_names=names, name=f"X({gname},{hname})")


def symmetric(n: int) -> FiniteGroup:
    """S_n on 0..n-1; elements ranked lexicographically by one-line notation,
    with (f*g)(x) = f(g(x))."""
    if n < 1 or math.factorial(n) > ORDER_CAP:
        raise ValueError(
            f"symmetric: n! must be within 1..{ORDER_CAP}, got n={n}"
        )
    perms = list(permutations(range(n)))
    rank = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    table = np.zeros((size, size), dtype=np.int32)
    for i, f in enumerate(perms):
        for j, g in enumerate(perms):
            table[i, j] = rank[tuple(f[g[x]] for x in range(n))]
    names = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, element_names=names, name=f"S({n})")


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n: rotations r^i at 0..n-1, reflections r^i s at n..2n-1."""
    if n < 1 or 2 * n > ORDER_CAP:
        raise ValueError(f"dihedral: 2n must be within 2..{ORDER_CAP}, got n={n}")
    size = 2 * n
    idx = np.arange(size)
    i, j = idx % n, idx // n
    sign = np.where(j == 1, -1, 1)
    res_i = (i[:, None] + sign[:, None] * i[None, :]) % n
    res_j = (j[:, None] + j[None, :]) % 2
    table = res_i + res_j * n
    names = [f"r^{k}" for k in range(n)] + [f"r^{k}*s" for k in range(n)]
    names[0] = "e"
    names[n] = "s"
    hint = [1, n] if n > 1 else [n]
    return FiniteGroup(table, element_names=names, name=f"D({n})", generator_hint=hint)


def abelian(factors: list[int] | tuple[int, ...]) -> FiniteGroup:
    """Direct sum of cyclic groups Z/f1 x Z/f2 x ... in mixed-radix indexing."""
    factors = tuple(int(f) for f in factors)
    if not factors:
        raise ValueError("abelian: need at least one factor")
    if any(f < 1 for f in factors):
        raise ValueError("abelian: factors must be positive")
    size = math.prod(factors)
    if size > ORDER_CAP:
        raise ValueError(f"abelian: order {size} exceeds {ORDER_CAP}")
    idx = np.arange(size)
    table = np.zeros((size, size), dtype=np.int64)
    stride = size
    for f in factors:
        stride //= f
        digit = idx // stride % f
        table += ((digit[:, None] + digit[None, :]) % f) * stride
    label = ",".join(str(f) for f in factors)
    return FiniteGroup(table, name=f"A({label})")
