"""Corpus generation for the verification sweeps.

The corpus covers every constructor family within the order bound (including
near-miss negatives like non-faithful semidirect products), pairwise direct
products of family members, and all subgroup isomorphism types of S(4) and
S(5). Entries are deduplicated up to isomorphism and sorted by spec string,
so sweep reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import (
    MetacyclicParams,
    SemidirectPQParams,
    abelian,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    metacyclic,
    semidirect_pq,
    symmetric,
)
from .core import FiniteGroup
from .iso import _cheap_invariants, are_isomorphic
from .lattice import all_subgroups
from .numth import is_prime


@dataclass(frozen=True)
class GroupEntry:
    spec: str
    family: str
    group: FiniteGroup


ALL_FAMILIES = (
    "cyclic",
    "quaternion",
    "dihedral",
    "abelian",
    "metacyclic",
    "pq",
    "products",
    "subgroups",
)

_corpus_cache: dict[tuple, tuple[GroupEntry, ...]] = {}


def _primes_upto(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if is_prime(p)]


def _prime_powers_upto(limit: int) -> list[int]:
    out = []
    for p in _primes_upto(limit):
        v = p
        while v <= limit:
            out.append(v)
            v *= p
    return sorted(out)


def _abelian_factor_multisets(limit: int) -> list[tuple[int, ...]]:
    """Non-cyclic abelian groups up to isomorphism: non-increasing tuples of
    prime powers with a repeated prime (all-distinct primes are cyclic by CRT
    and already covered by the cyclic family)."""
    pps = _prime_powers_upto(limit // 2)
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], product: int, max_factor: int) -> None:
        for f in pps:
            if f > max_factor or product * f > limit:
                continue
            cur = prefix + (f,)
            if len(cur) >= 2:
                primes = [min(p for p in range(2, x + 1) if x % p == 0) for x in cur]
                if len(set(primes)) < len(primes):
                    out.append(cur)
            rec(cur, product * f, f)

    rec((), 1, limit)
    return sorted(out)


def metacyclic_param_space(limit: int) -> list[MetacyclicParams]:
    """All parameter triples passing the metacyclic side conditions, m*n <= limit."""
    out = []
    for m in range(3, limit // 2 + 1, 2):
        for n in range(2, limit // m + 1):
            for r in range(2, m):
                params = MetacyclicParams(m, n, r)
                try:
                    params.validate()
                except ValueError:
                    continue
                out.append(params)
    return out


def semidirect_pq_param_space(limit: int) -> list[SemidirectPQParams]:
    """All valid semidirect parameter tuples with p^alpha * q^beta <= limit."""
    out = []
    for p in _primes_upto(limit // 2):
        if p == 2:
            continue
        pa = p
        alpha = 1
        while pa * 2 <= limit:
            for q in _primes_upto(limit // pa):
                if q == p:
                    continue
                qb = q
                beta = 1
                while pa * qb <= limit:
                    for r in range(1, pa):
                        if pow(r, qb, pa) == 1:
                            out.append(SemidirectPQParams(p, alpha, q, beta, r))
                    qb *= q
                    beta += 1
            pa *= p
            alpha += 1
    return out


def _base_entries(max_order: int, families: frozenset[str]) -> list[GroupEntry]:
    entries: list[GroupEntry] = []
    if "cyclic" in families:
        for n in range(1, max_order + 1):
            entries.append(GroupEntry(f"C({n})", "cyclic", cyclic(n)))
    if "quaternion" in families:
        n = 3
        while 2**n <= max_order:
            entries.append(GroupEntry(f"Q({n})", "quaternion", generalized_quaternion(n)))
            n += 1
    if "dihedral" in families:
        for n in range(1, max_order // 2 + 1):
            entries.append(GroupEntry(f"D({n})", "dihedral", dihedral(n)))
    if "abelian" in families:
        for factors in _abelian_factor_multisets(max_order):
            label = ",".join(str(f) for f in factors)
            entries.append(GroupEntry(f"A({label})", "abelian", abelian(factors)))
    if "metacyclic" in families:
        for prm in metacyclic_param_space(max_order):
            entries.append(
                GroupEntry(
                    f"M({prm.m},{prm.n},{prm.r})",
                    "metacyclic",
                    metacyclic(prm.m, prm.n, prm.r),
                )
            )
    if "pq" in families:
        for prm in semidirect_pq_param_space(max_order):
            entries.append(
                GroupEntry(
                    f"PQ({prm.p},{prm.alpha},{prm.q},{prm.beta},{prm.r})",
                    "pq",
                    semidirect_pq(prm.p, prm.alpha, prm.q, prm.beta, prm.r),
                )
            )
    return entries


class _Deduper:
    """Keeps one representative per isomorphism class, bucketed by cheap
    invariants so the backtracking test rarely runs."""

    def __init__(self) -> None:
        self.buckets: dict[tuple, list[GroupEntry]] = {}
        self.kept: list[GroupEntry] = []

    def add(self, entry: GroupEntry) -> bool:
        inv = _cheap_invariants(entry.group)
        bucket = self.buckets.setdefault(inv, [])
        for other in bucket:
            if are_isomorphic(other.group, entry.group) is not None:
                return False
        bucket.append(entry)
        self.kept.append(entry)
        return True


def build_corpus(
    max_order: int, families: tuple[str, ...] | None = None
) -> tuple[GroupEntry, ...]:
    """Deduplicated corpus for a sweep; cached per (max_order, families)."""
    if max_order < 1:
        raise ValueError(f"max_order must be positive, got {max_order}")
    fams = frozenset(families) if families is not None else frozenset(ALL_FAMILIES)
    unknown = fams - set(ALL_FAMILIES)
    if unknown:
        raise ValueError(f"unknown families: {sorted(unknown)}")
    key = (max_order, tuple(sorted(fams)))
    cached = _corpus_cache.get(key)
    if cached is not None:
        return cached

    dedupe = _Deduper()
    base = _base_entries(max_order, fams)
    for entry in base:
        dedupe.add(entry)

    if "products" in fams:
        factors = [e for e in dedupe.kept if 1 < e.group.order <= max_order // 2]
        for i, left in enumerate(factors):
            for right in factors[i:]:
                if left.group.order * right.group.order > max_order:
                    continue
                spec = f"X({left.spec},{right.spec})"
                dedupe.add(
                    GroupEntry(spec, "products", direct_product(left.group, right.group))
                )

    if "subgroups" in fams:
        for amb_spec, amb_n in (("S(4)", 4), ("S(5)", 5)):
            amb = symmetric(amb_n)
            lat = all_subgroups(amb)
            for idx, sub in enumerate(lat.subgroups):
                if sub.size > max_order:
                    continue
                dedupe.add(
                    GroupEntry(f"{amb_spec}[{idx}]", "subgroups", sub.as_group())
                )

    result = tuple(sorted(dedupe.kept, key=lambda e: e.spec))
    _corpus_cache[key] = result
    return result
