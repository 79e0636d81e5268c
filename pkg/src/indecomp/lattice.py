"""Complete subgroup lattice enumeration and derived subgroup families.

The primary algorithm is layered closure: seed with all cyclic subgroups,
then repeatedly extend each known subgroup H by one outside element g to
<H, g>, deduplicating by mask, until nothing new appears. Extension skips
elements of already-covered cosets gH and Hg, which generate nothing new.

enumerate_by_joins() is a second, mechanically independent strategy
(product-set fixpoint joins of primary cyclic subgroups) used by the test
suite to cross-check the layered closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FiniteGroup, Subgroup
from .limits import ORDER_CAP
from .numth import factorize, is_prime, p_part


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of a group, sorted by (size, mask), with normality and
    conjugacy-class annotations."""

    parent: FiniteGroup = field(repr=False)
    subgroups: tuple[Subgroup, ...]
    normal_flags: tuple[bool, ...]
    conjugacy_class_id: tuple[int, ...]

    def __repr__(self) -> str:
        return f"<SubgroupLattice of order {self.parent.order}: {len(self.subgroups)} subgroups>"

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, mask: int) -> int:
        for i, s in enumerate(self.subgroups):
            if s.mask == mask:
                return i
        raise KeyError(f"mask {mask:#x} not in lattice")

    def normal_subgroups(self) -> list[Subgroup]:
        return [s for s, f in zip(self.subgroups, self.normal_flags) if f]

    def subgroups_of_size(self, size: int) -> list[Subgroup]:
        return [s for s in self.subgroups if s.size == size]

    def members_within(self, mask: int) -> list[Subgroup]:
        """Subgroups contained in the given mask (i.e. the sublattice)."""
        return [s for s in self.subgroups if s.mask & mask == s.mask]


def all_subgroups(G: FiniteGroup) -> SubgroupLattice:
    """Complete subgroup lattice via layered closure (cached per group)."""
    if G._lattice is not None:
        return G._lattice
    if G.order > ORDER_CAP:
        raise ValueError(f"order {G.order} exceeds the cap of {ORDER_CAP}")
    n = G.order
    kern = G.kernel
    full = G.full_mask
    seen: set[int] = {1}
    for g in range(1, n):
        seen.add(G.cyclic_subgroup_mask(g))
    frontier = sorted(seen - {1})
    while frontier:
        fresh: list[int] = []
        for mask in frontier:
            if mask == full:
                continue
            covered = mask
            for g in range(1, n):
                if covered >> g & 1:
                    continue
                grown = kern.close(mask | 1 << g)
                if grown not in seen:
                    seen.add(grown)
                    fresh.append(grown)
                covered |= kern.coset(g, mask) | kern.coset(g, mask, right=True)
        frontier = fresh
    masks = sorted(seen, key=lambda m: (m.bit_count(), m))
    position = {m: i for i, m in enumerate(masks)}

    gens = G.generating_set()
    normal = [False] * len(masks)
    class_id = [-1] * len(masks)
    next_class = 0
    for i, m in enumerate(masks):
        if class_id[i] != -1:
            continue
        orbit = {m}
        queue = [m]
        while queue:
            cur = queue.pop()
            for g in gens:
                conj = kern.conjugate(cur, g)
                if conj not in orbit:
                    orbit.add(conj)
                    queue.append(conj)
        for member in orbit:
            j = position[member]  # conjugates of subgroups are subgroups
            class_id[j] = next_class
            normal[j] = len(orbit) == 1
        next_class += 1

    lat = SubgroupLattice(
        parent=G,
        subgroups=tuple(Subgroup(G, m, m.bit_count()) for m in masks),
        normal_flags=tuple(normal),
        conjugacy_class_id=tuple(class_id),
    )
    G._lattice = lat
    return lat


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return all_subgroups(G).normal_subgroups()


def sylow_subgroups(G: FiniteGroup, p: int) -> list[Subgroup]:
    """All Sylow p-subgroups; p must be a prime dividing the order."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if G.order % p != 0:
        raise ValueError(f"{p} does not divide the group order {G.order}")
    target = p_part(G.order, p)
    return all_subgroups(G).subgroups_of_size(target)


def fitting_subgroup(G: FiniteGroup) -> Subgroup:
    """Largest normal nilpotent subgroup: the join of the p-cores, each the
    intersection of all Sylow p-subgroups."""
    join_seed = 1
    for p in factorize(G.order):
        core = G.full_mask
        for s in sylow_subgroups(G, p):
            core &= s.mask
        join_seed |= core
    return G.subgroup(G.kernel.close(join_seed))


def maximal_abelian_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Abelian subgroups not properly contained in a larger abelian one."""
    abelians = [s for s in all_subgroups(G).subgroups if s.is_abelian()]
    out = []
    for s in abelians:
        if not any(o.size > s.size and s.mask & o.mask == s.mask for o in abelians):
            out.append(s)
    return out


def enumerate_by_joins(G: FiniteGroup) -> set[int]:
    """Independent enumeration strategy for cross-checking all_subgroups.

    Seeds with the cyclic subgroups of prime-power order (computed purely by
    element powers) and closes the family under pairwise joins, where each
    join is computed by product-set fixpoint S -> S*S rather than element
    worklist closure. Every subgroup is a join of the primary parts of its
    cyclic subgroups, so the fixpoint family is exactly the lattice.
    """
    n = G.order
    kern = G.kernel
    orders = G.element_orders()
    table = G.table
    seeds: set[int] = {1}
    for g in range(1, n):
        o = int(orders[g])
        for p in factorize(o):
            e = o // p_part(o, p)
            x = g
            for _ in range(e - 1):
                x = int(table[x, g])
            # x = g^e now has p-power order; walk its powers directly
            mask = 1
            y = x
            while y != 0:
                mask |= 1 << y
                y = int(table[y, x])
            seeds.add(mask)
    family = sorted(seeds)
    known = set(family)
    qi = 0
    while qi < len(family):
        a = family[qi]
        qi += 1
        for j in range(qi):
            s = a | family[j]
            while True:
                grown = kern.product(s, s)
                if grown == s:
                    break
                s = grown
            if s not in known:
                known.add(s)
                family.append(s)
    return known


def hasse_edges(lat: SubgroupLattice) -> list[tuple[int, int]]:
    """Covering pairs (i, j) with subgroup i maximal in subgroup j."""
    subs = lat.subgroups
    edges = []
    for j, top in enumerate(subs):
        for i, low in enumerate(subs):
            if low.size >= top.size or low.mask & top.mask != low.mask:
                continue
            covered = False
            for mid in subs:
                if (
                    low.size < mid.size < top.size
                    and low.mask & mid.mask == low.mask
                    and mid.mask & top.mask == mid.mask
                ):
                    covered = True
                    break
            if not covered:
                edges.append((i, j))
    return edges


def lattice_to_dot(lat: SubgroupLattice) -> str:
    """DOT rendering of the Hasse diagram; nodes are labeled by subgroup
    order and normal subgroups are double-circled."""
    lines = ["digraph subgroup_lattice {", "  rankdir=BT;", "  node [shape=circle];"]
    for i, s in enumerate(lat.subgroups):
        extra = ", peripheries=2" if lat.normal_flags[i] else ""
        lines.append(f'  n{i} [label="{s.size}"{extra}];')
    for i, j in hasse_edges(lat):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def subgroup_counts_by_size(lat: SubgroupLattice) -> dict[int, int]:
    out: dict[int, int] = {}
    for s in lat.subgroups:
        out[s.size] = out.get(s.size, 0) + 1
    return out
